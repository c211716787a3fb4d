#include <doctest.h>

#include "stern/error.hpp"
#include "stern/powersums.hpp"

using namespace stern;

namespace {

std::vector<Rational> seq(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

CoeffArray row(int n) { return CoeffArray::from_row(stern_row(n, RowKind::Triangle)); }

}  // namespace

TEST_CASE("coefficient arrays") {
  const ProductSpec s = ProductSpec::stern();
  const CoeffArray a = gen_coeffs(s, 2);
  CHECK(a.numerators == std::vector<Integer>{1, 1, 2, 1, 2, 1, 1});
  CHECK(gen_coeffs(s, 0).numerators == std::vector<Integer>{1});
  const ProductSpec sq = ProductSpec::univariate(Poly{1, 2, 1}, Poly{1}, 2);
  CHECK(gen_coeffs(sq, 2).numerators == std::vector<Integer>{1, 2, 3, 4, 3, 2, 1});
  CHECK_THROWS_AS(gen_coeffs(s, 30, 1000), Error);
}

TEST_CASE("window sums on small rows") {
  CHECK(window_power_sum(row(1), WindowPattern({1, 1})) == 2);
  CHECK(window_power_sum(row(2), WindowPattern({2})) == 13);
  CHECK(window_power_sum(row(2), WindowPattern({1, 1})) == 10);
  CHECK(window_power_sum(row(2), WindowPattern({1, 0, 1})) == 1 * 2 + 1 * 1 + 2 * 2 + 1 * 1 + 2 * 1);
  CHECK_THROWS_AS(window_power_sum(row(2), WindowPattern::single(2, 1)), Error);
}

TEST_CASE("chunked sums do not depend on the thread count") {
  const CoeffArray a = row(12);
  const WindowPattern alpha({2, 0, 1, 3});
  const Rational one = window_power_sum(a, alpha, 1);
  for (unsigned t : {2U, 3U, 8U}) CHECK(window_power_sum(a, alpha, t) == one);
}

TEST_CASE("brute-force sequences") {
  const ProductSpec s = ProductSpec::stern();
  CHECK(u_brute(s, WindowPattern({3}), 4) == seq({1, 3, 21, 147, 1029}));
  CHECK(u_brute(s, WindowPattern({2, 1}), 3) == seq({0, 2, 14, 98}));
  CHECK(v_brute(WindowPattern({2}), 3) == seq({2, 6, 24, 106}));
}

TEST_CASE("reversal symmetry and row counts") {
  const ProductSpec s = ProductSpec::stern();
  const std::vector<std::vector<int>> patterns = {{2, 1}, {3, 1, 2}, {1, 0, 2}, {4, 0, 0, 2}, {1, 2, 3}, {2, 0, 3, 1}};
  for (const auto& p : patterns) {
    const WindowPattern a(p);
    CHECK(u_brute(s, a, 12) == u_brute(s, a.reversed(), 12));
  }
  Integer three = 1;
  for (int n = 0; n <= 20; ++n, three *= 3) {
    const CoeffArray a = gen_coeffs(s, n);
    CHECK(support_count(a) == (std::size_t{2} << n) - 1);
    if (n <= 14) CHECK(window_power_sum(a, WindowPattern({1})) == Rational(three));
  }
}

TEST_CASE("prefactor and monomial normalization") {
  // x^2 * (1+x+x^2) has the same window sums as 1+x+x^2.
  const ProductSpec shifted = ProductSpec::univariate(Poly{0, 0, 1, 1, 1}, Poly{0, 1}, 2);
  CHECK(u_brute(shifted, WindowPattern({2, 1}), 6) == u_brute(ProductSpec::stern(), WindowPattern({2, 1}), 6));
  CHECK_THROWS_AS(ProductSpec::univariate(Poly(), Poly{1}, 2), Error);
  CHECK_THROWS_AS(ProductSpec(parse_poly("1+x1+x2"), MPoly::constant(2, 1), {2, 2, 2}), Error);
}

TEST_CASE("multivariate arrays") {
  const ProductSpec s(parse_poly("(1+x1+x2)^2"), MPoly::constant(2, 1), {2});
  CHECK(s.bases() == std::vector<int>{2, 2});
  const CoeffArray a = gen_coeffs(s, 1);
  CHECK(window_power_sum(a, WindowPattern::single(2, 1)) == 9);
  CHECK(window_power_sum(gen_coeffs(s, 3), WindowPattern::single(2, 1)) == 729);
}
