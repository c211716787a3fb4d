#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "stern/number.hpp"

namespace stern {

// Dense univariate polynomial over the rationals, coefficients ascending.
// The coefficient list never has trailing zeros, so the zero polynomial is
// the empty list and has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int k);
  static Poly x() { return monomial(Rational(1), 1); }
  // x - theta
  static Poly linear(const Rational& theta);
  // Product of (x - root) over the list.
  static Poly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational leading() const;

  Rational operator()(const Rational& at) const;

  Poly monic() const;
  Poly derivative() const;
  Poly compose_power(int k) const;  // p(x^k)
  Poly pow(unsigned e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  bool operator==(const Poly& o) const = default;

  // "x^2 - 5*x + 2"
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// (quotient, remainder); throws ZeroPolynomial on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Throws DivisionNotExact unless b divides a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& divisor, const Poly& a);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
Poly lcm(const Poly& a, const Poly& b);

}  // namespace stern
