#include <algorithm>
#include <doctest.h>

#include <random>

#include "stern/error.hpp"
#include "stern/transfer.hpp"

using namespace stern;

namespace {

const MPoly& stern_kernel() {
  static const MPoly k = ProductSpec::stern().kernel();
  return k;
}

PatternCombo combo(std::initializer_list<std::pair<std::vector<int>, long>> terms) {
  PatternCombo c;
  for (const auto& [p, v] : terms) c[WindowPattern(p)] = v;
  return c;
}

std::vector<Rational> seq(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Patterns of weight exactly w with positive ends and length <= max_len.
std::vector<WindowPattern> patterns_of_weight(int w, int max_len) {
  std::vector<WindowPattern> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      if (cur.back() > 0) out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int e = cur.empty() ? 1 : 0; e <= left; ++e) {
      cur.push_back(e);
      self(self, left - e);
      cur.pop_back();
    }
  };
  rec(rec, w);
  return out;
}

}  // namespace

TEST_CASE("canonical representatives") {
  CHECK(canonicalize({0, 2, 1, 0}, true) == WindowPattern({1, 2}));
  CHECK(canonicalize({1, 2}, false) == WindowPattern({1, 2}));
  CHECK(canonicalize({2, 1}, true) == WindowPattern({1, 2}));
  CHECK(WindowPattern({1, 2}).display(true) == WindowPattern({2, 1}));
  CHECK_THROWS_AS(canonicalize({0, 0}, true), Error);
  CHECK(parse_pattern("0,0=2;1,0=1", 2).weight() == 3);
}

TEST_CASE("one-step expansions of the Stern recursion") {
  CHECK(expand(stern_kernel(), {2}, WindowPattern({2}), true) == combo({{{2}, 3}, {{1, 1}, 2}}));
  CHECK(expand(stern_kernel(), {2}, WindowPattern({1, 1}), true) == combo({{{2}, 2}, {{1, 1}, 2}}));
  CHECK(expand(stern_kernel(), {2}, WindowPattern({3}), true) == combo({{{3}, 3}, {{1, 2}, 6}}));
  CHECK(expand(stern_kernel(), {2}, WindowPattern({2, 1}), true) == combo({{{3}, 2}, {{1, 2}, 4}}));
  CHECK_THROWS_AS(expand(parse_poly("x+x^2"), {2}, WindowPattern({2}), true), Error);
  CHECK_THROWS_AS(expand(stern_kernel(), {2, 2}, WindowPattern({2}), true), Error);
}

TEST_CASE("expansions conserve weight and respect the spread bound") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> deg(1, 5), coef(-2, 3), base(2, 4);
  for (int t = 0; t < 40; ++t) {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    c.front() = 1;
    c.back() = 1;
    const Poly p(c);
    const int b = base(rng);
    for (const auto& a : patterns_of_weight(3, 4)) {
      const PatternCombo e = expand(MPoly::from_univariate(p), {b}, a, false);
      for (const auto& [beta, v] : e) CHECK(beta.weight() == 3);
      CHECK(spread(e) <= 1 + (p.degree() + a.length() - 1) / b);
      if (p.degree() % b == 0) CHECK(spread(e) <= 1 + p.degree() / b + (a.length() - 1) / b);
    }
  }
}

TEST_CASE("transfer systems for the Stern spec") {
  const ProductSpec s = ProductSpec::stern();
  const TransferSystem a4 = build_system(s, WindowPattern({4}), true);
  REQUIRE(a4.size() == 3);
  CHECK(a4.closure[0].display(true) == WindowPattern({4}));
  CHECK(a4.closure[1].display(true) == WindowPattern({3, 1}));
  CHECK(a4.closure[2].display(true) == WindowPattern({2, 2}));
  for (int r = 1; r <= 40; ++r) CHECK(build_system(s, WindowPattern({r}), true).size() == static_cast<std::size_t>(1 + r / 2));

  const TransferSystem a1 = build_system(s, WindowPattern({1}), true);
  CHECK(a1.matrix == Matrix::from_rows({{3}}));
  CHECK(build_system(s, WindowPattern({2}), true).matrix == Matrix::from_rows({{3, 2}, {2, 2}}));
}

TEST_CASE("the (1,1,1,1) system") {
  const TransferSystem t = build_system(ProductSpec::stern(), WindowPattern({1, 1, 1, 1}), true);
  std::vector<std::string> order;
  for (const auto& p : t.closure) order.push_back(p.display(true).to_string());
  CHECK(order == std::vector<std::string>{"(4)", "(3,1)", "(2,2)", "(1,2,1)", "(2,1,1)", "(1,1,1,1)"});
  for (std::size_t i = 0; i < 6; ++i) CHECK(t.matrix(i, 0) == std::vector<long>{3, 2, 2, 1, 1, 0}[i]);
  // Row sums count the monomials of each expansion, e.g. 211 gives
  // 2^2*1*2 from even k plus 1*2*1 from odd k.
  const std::vector<long> row_sums{17, 10, 8, 8, 10, 8};
  for (std::size_t i = 0; i < 6; ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < 6; ++j) sum += t.matrix(i, j);
    CHECK(sum == row_sums[i]);
  }
}

TEST_CASE("block lower-triangular structure") {
  const ProductSpec s = ProductSpec::stern();
  for (int w = 1; w <= 4; ++w)
    for (const auto& alpha : patterns_of_weight(w, 4)) {
      const TransferSystem t = build_system(s, alpha, true);
      for (std::size_t i = 0; i < t.size(); ++i) {
        const int li = t.closure[i].length();
        for (std::size_t j = 0; j < t.size(); ++j) {
          const int lj = t.closure[j].length();
          // Windows of length <= 2 stay within length 2; longer ones never grow.
          if (lj > std::max(li, 2)) CHECK(t.matrix(i, j) == 0);
          // Beyond length 2 the diagonal blocks are 1x1: 1 for length 3, 0 after.
          if (li >= 3 && lj == li && j > i) CHECK(t.matrix(i, j) == 0);
          if (li >= 3 && i == j && w == 4 && alpha.length() == 4) CHECK(t.matrix(i, i) == (li == 3 ? 1 : 0));
        }
      }
    }
}

TEST_CASE("iteration") {
  const ProductSpec s = ProductSpec::stern();
  CHECK(iterate(build_system(s, WindowPattern({2}), true), 7) == seq({1, 3, 13, 59, 269, 1227, 5597, 25531}));
  CHECK(iterate(build_system(s, WindowPattern({3}), true), 4) == seq({1, 3, 21, 147, 1029}));
  const ProductSpec sq = ProductSpec::univariate(Poly{1, 2, 1}, Poly{1}, 2);
  CHECK(iterate(build_system(sq, WindowPattern({2}), true), 2) == seq({1, 6, 44}));
}

TEST_CASE("oracle equivalence with direct summation") {
  const ProductSpec s = ProductSpec::stern();
  for (int w = 1; w <= 4; ++w)
    for (const auto& alpha : patterns_of_weight(w, 4)) {
      CHECK(iterate(build_system(s, alpha, true), 12) == u_brute(s, alpha, 12));
      CHECK(iterate(build_system(s, alpha, false), 10) == u_brute(s, alpha, 10));
    }
  // Prefactors, other bases, non-palindromic kernels.
  const std::vector<ProductSpec> specs = {ProductSpec::univariate(Poly{1, 1, 1}, Poly{1, 2}, 2),
                                          ProductSpec::univariate(Poly{2, -1, 0, 3}, Poly{1, 0, -1}, 3),
                                          ProductSpec::univariate(Poly{1, 3, 3, 1}, Poly{3}, 2),
                                          ProductSpec::univariate(Poly{1, 1, 1, 1}, Poly{1, 1}, 3)};
  for (const auto& spec : specs)
    for (const auto& alpha : {WindowPattern({1}), WindowPattern({2, 1}), WindowPattern({1, 0, 2})})
      CHECK(iterate(build_system(spec, alpha, false), 9) == u_brute(spec, alpha, 9));
  // q(1) = 0 kills the plain coefficient sum.
  const TransferSystem zero = build_system(specs[1], WindowPattern({1}), false);
  CHECK(zero.size() == 1);
  CHECK(iterate(zero, 3) == seq({0, 0, 0, 0}));
}

TEST_CASE("multivariate systems") {
  const ProductSpec s(parse_poly("(1+x1+x2)^2"), MPoly::constant(2, 1), {2, 3});
  for (int r = 1; r <= 3; ++r) {
    const WindowPattern alpha = WindowPattern::single(2, r);
    CHECK(iterate(build_system(s, alpha, false), 5) == u_brute(s, alpha, 5));
  }
  const WindowPattern two_cells = parse_pattern("0,0=1;1,1=1", 2);
  CHECK(iterate(build_system(s, two_cells, false), 5) == u_brute(s, two_cells, 5));
}

TEST_CASE("errors") {
  const ProductSpec lopsided = ProductSpec::univariate(Poly{1, 2}, Poly{1}, 2);
  CHECK_THROWS_AS(build_system(lopsided, WindowPattern({2}), true), Error);
  TransferOptions tight;
  tight.closure_budget = 2;
  CHECK_THROWS_AS(build_system(ProductSpec::stern(), WindowPattern({8}), true, tight), Error);
  // Contraction base 1 never closes up.
  TransferOptions opts;
  opts.closure_budget = 200;
  try {
    (void)build_system(ProductSpec::univariate(Poly{1, 1}, Poly{1}, 1), WindowPattern({2}), true, opts);
    FAIL("expected ClosureBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ClosureBudgetExceeded);
  }
}
