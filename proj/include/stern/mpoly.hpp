#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stern/number.hpp"
#include "stern/poly.hpp"

namespace stern {

using Exponent = std::vector<int>;

// Sparse polynomial in `vars` variables. Terms are kept in lexicographic
// order of exponent vectors and zero coefficients are never stored.
class MPoly {
 public:
  explicit MPoly(int vars = 1);

  static MPoly constant(int vars, const Rational& c);
  static MPoly variable(int vars, int index);
  static MPoly from_univariate(const Poly& p);

  int vars() const { return vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(const Exponent& e) const;
  Rational constant_term() const;
  void add_term(const Exponent& e, const Rational& c);

  // Largest exponent per variable (all -1 for the zero polynomial).
  Exponent max_degrees() const;
  Exponent min_degrees() const;
  int total_degree() const;

  // Divides out the largest monomial factor x^m; writes m to `removed`.
  MPoly strip_monomial(Exponent* removed = nullptr) const;
  // x_i -> x_i^{k_i}
  MPoly compose_power(const std::vector<int>& k) const;
  // Invariant under x^e -> x^{max - e} after stripping the monomial factor.
  bool is_palindromic() const;
  bool is_integral() const;

  Poly to_univariate() const;

  MPoly pow(unsigned e) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }

  bool operator==(const MPoly& o) const = default;

  std::string to_string() const;

 private:
  void check_arity(const MPoly& o) const;
  int vars_;
  std::map<Exponent, Rational> terms_;
};

// Exact multivariate division; throws DivisionNotExact when b does not
// divide a.
MPoly exact_div(const MPoly& a, const MPoly& b);

// Parses either a comma-separated ascending coefficient list ("1,1,1") or an
// expression over x (univariate) or x1..xd / x,y,z with + - * ^ / and
// parentheses, e.g. "(1+x1+x2)^2". The result has at least `min_vars`
// variables.
MPoly parse_poly(std::string_view text, int min_vars = 1);

}  // namespace stern
