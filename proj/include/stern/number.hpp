#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace stern {

using Integer = mpz_class;
// mpq_class results of arithmetic are always in lowest terms with a positive
// denominator; values built from parts go through make_rational().
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "12", "-7/3", "+4". Anything else (decimals, exponents, symbols)
// is rejected: only rational inputs are meaningful here.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

Integer binomial(unsigned long n, unsigned long k);
Integer lcm_of_denominators(const std::vector<Rational>& values);

}  // namespace stern
