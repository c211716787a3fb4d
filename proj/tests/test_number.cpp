#include <doctest.h>

#include "stern/error.hpp"
#include "stern/mpoly.hpp"
#include "stern/number.hpp"
#include "stern/serialize.hpp"

using namespace stern;

TEST_CASE("rationals are kept in lowest terms") {
  const Rational r = make_rational(6, -4);
  CHECK(to_string(r) == "-3/2");
  CHECK(r.get_den() == 2);
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("parsing scalars") {
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_integer("123456789012345678901234567890") > Integer("123456789012345678901234567889"));
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_integer("12a"), Error);
}

TEST_CASE("binomial and denominators") {
  CHECK(binomial(40, 20) == Integer("137846528820"));
  CHECK(lcm_of_denominators({make_rational(1, 4), make_rational(1, 6), Rational(3)}) == 12);
}

TEST_CASE("multivariate parsing") {
  const MPoly p = parse_poly("(1+x1+x2)^2");
  CHECK(p.vars() == 2);
  CHECK(p.coeff({1, 1}) == 2);
  CHECK(p.coeff({0, 2}) == 1);
  CHECK(p.term_count() == 6);
  CHECK(parse_poly("1,1,1") == parse_poly("1+x+x^2"));
  CHECK(parse_poly("2x(x-1)/3").to_univariate() == Poly({Rational(0), make_rational(-2, 3), make_rational(2, 3)}));
  CHECK_THROWS_AS(parse_poly("1+0.5x"), Error);
  CHECK_THROWS_AS(parse_poly("1+w"), Error);
  CHECK_THROWS_AS(parse_poly("(1+x"), Error);
}

TEST_CASE("multivariate arithmetic") {
  const MPoly a = parse_poly("x1+x2");
  const MPoly b = parse_poly("x1-x2");
  CHECK(exact_div(a * b, b) == a);
  CHECK_THROWS_AS(exact_div(a * b + MPoly::constant(2, 1), b), Error);
  CHECK_THROWS_AS(a + parse_poly("x"), Error);
  CHECK(parse_poly("(1+x1)*(1+x2)").is_palindromic());
  CHECK_FALSE(parse_poly("(1+x1+x2)^2").is_palindromic());
  CHECK_FALSE(parse_poly("1+2x1+x2").is_palindromic());
  CHECK(parse_poly("x^2+x^3").is_palindromic());
}

TEST_CASE("serialization round trip") {
  const Poly p{2, -5, 1};
  const Json j = to_json(p);
  CHECK(j.dump() == R"({"vars":1,"coeffs":["2","-5","1"]})");
  CHECK(poly_from_json(j) == p);
  const MPoly m = parse_poly("x1^2 - x2/3");
  CHECK(mpoly_from_json(to_json(m)) == m);
}
