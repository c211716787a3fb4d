#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stern/mpoly.hpp"
#include "stern/number.hpp"
#include "stern/pattern.hpp"
#include "stern/sternarrays.hpp"

namespace stern {

inline constexpr std::size_t kDefaultSupportBudget = std::size_t{1} << 24;

// The data (p, q, b) of F_n(x) = q(x) * prod_{i<n} p(x^{b^i}), possibly in
// several variables with one contraction base per variable.
class ProductSpec {
 public:
  // A single base with several variables is broadcast to every variable.
  // Bases of 1 are accepted (they give Pascal-type arrays) even though the
  // closure construction only terminates for bases >= 2.
  ProductSpec(MPoly kernel, MPoly prefactor, std::vector<int> bases);

  // p = 1 + x + x^2, q = 1, b = 2.
  static ProductSpec stern();
  static ProductSpec univariate(const Poly& kernel, const Poly& prefactor, int base);

  const MPoly& kernel() const { return kernel_; }
  const MPoly& prefactor() const { return prefactor_; }
  const std::vector<int>& bases() const { return bases_; }
  int dims() const { return kernel_.vars(); }

  // Monomial factors of p and q removed, so p(0) != 0 and q(0) != 0. Window
  // sums only see translated copies of the array, so nothing changes.
  ProductSpec normalized() const;
  bool palindromic() const { return kernel_.is_palindromic() && prefactor_.is_palindromic(); }

  std::string describe() const;

 private:
  MPoly kernel_;
  MPoly prefactor_;
  std::vector<int> bases_;
};

// Finite coefficient array stored densely over its bounding box, with a
// common denominator: value(k) = numerators[k] / denominator.
struct CoeffArray {
  std::vector<std::size_t> extents;
  std::vector<Integer> numerators;
  Integer denominator = 1;
  int generation = 0;

  int dims() const { return static_cast<int>(extents.size()); }
  std::size_t size() const { return numerators.size(); }
  Rational at(const std::vector<std::size_t>& index) const;

  static CoeffArray from_row(const ArrayRow& row);
  // Coefficients of a polynomial after removing its monomial factor.
  static CoeffArray from_poly(const MPoly& p);

  bool palindromic() const;
};

CoeffArray gen_coeffs(const ProductSpec& spec, int n, std::size_t budget = kDefaultSupportBudget);

// sum over positions k of prod_t c_{k+t}^{alpha_t}. Positions are split into
// `threads` chunks; the exact sum does not depend on the split.
Rational window_power_sum(const CoeffArray& arr, const WindowPattern& alpha, unsigned threads = 1);

std::size_t support_count(const CoeffArray& arr);

// u(0..n_max), each generation built from scratch.
std::vector<Rational> u_brute(const ProductSpec& spec, const WindowPattern& alpha, int n_max,
                              std::size_t budget = kDefaultSupportBudget);
// The same sums over Stern's diatomic array.
std::vector<Rational> v_brute(const WindowPattern& alpha, int n_max, std::size_t budget = kDefaultSupportBudget);

}  // namespace stern
