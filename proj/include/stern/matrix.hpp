#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stern/number.hpp"
#include "stern/poly.hpp"

namespace stern {

// Square matrix over the rationals, row-major.
class Matrix {
 public:
  explicit Matrix(std::size_t n = 1);

  static Matrix identity(std::size_t n);
  // Throws InvalidArgument unless the rows form a non-empty square grid.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::vector<Rational> apply(std::span<const Rational> v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  bool is_integral() const;

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t n_;
  std::vector<Rational> a_;
};

// det(xI - M) via similarity reduction to upper Hessenberg form.
Poly charpoly(const Matrix& m);

// Least-degree monic annihilator of v under m (the Krylov annihilator).
Poly krylov_annihilator(const Matrix& m, std::span<const Rational> v);

// Minimal polynomial: lcm of the Krylov annihilators of the unit vectors.
Poly minpoly(const Matrix& m);

// Evaluates p(M).
Matrix evaluate(const Poly& p, const Matrix& m);

// Solves the square system a·x = rhs exactly; throws InvalidArgument when
// the system is singular.
std::vector<Rational> solve(const Matrix& a, std::span<const Rational> rhs);

}  // namespace stern
