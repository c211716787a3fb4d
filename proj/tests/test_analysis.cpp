#include <doctest.h>

#include "stern/analysis.hpp"
#include "stern/error.hpp"

using namespace stern;

namespace {

Poly P(const char* text) { return parse_poly(text).to_univariate(); }

}  // namespace

TEST_CASE("recurrence reports for the Stern spec") {
  const ProductSpec s = ProductSpec::stern();
  const RecurrenceReport r2 = recurrence_report(s, WindowPattern({2}));
  CHECK(r2.mmp == P("x^2-5x+2"));
  CHECK(r2.rmp == P("x^2-5x+2"));
  CHECK(r2.n0 == 0);
  CHECK(r2.divisibility_ok);

  const RecurrenceReport r3 = recurrence_report(s, WindowPattern({3}));
  CHECK(r3.mmp == P("x(x-7)"));
  CHECK(r3.rmp == P("x-7"));
  CHECK(r3.n0 == 1);

  const RecurrenceReport r4 = recurrence_report(s, WindowPattern({4}));
  CHECK(r4.rmp == P("(x+1)(x^2-11x+2)"));
  CHECK(r4.values[3] == 395);
  CHECK(Rational(395) == 10 * r4.values[2] + 9 * r4.values[1] - 2 * r4.values[0]);
}

TEST_CASE("rmp divides mmp and annihilates the values") {
  const ProductSpec s = ProductSpec::stern();
  for (const auto& a : {WindowPattern({5}), WindowPattern({2, 2}), WindowPattern({1, 0, 3}), WindowPattern({1, 1, 1, 1})}) {
    const RecurrenceReport r = recurrence_report(s, a);
    CHECK(r.divisibility_ok);
    CHECK(r.rmp.coeff(0) != 0);
    CHECK(annihilates(r.rmp, r.values, r.n0));
  }
}

TEST_CASE("univariate analogue") {
  const ProductSpec cube = ProductSpec::univariate(P("(1+x)^3"), Poly{1}, 2);
  CHECK(recurrence_report(cube, WindowPattern({2})).rmp == P("(x-2)(x-8)(x-32)"));
}

TEST_CASE("closed forms for weight three") {
  const ProductSpec s = ProductSpec::stern();
  const auto u3 = recurrence_report(s, WindowPattern({3})).values;
  const auto u21 = iterate(build_system(s, WindowPattern({2, 1}), true), 12);
  Integer p = 1;
  for (int n = 1; n <= 12; ++n, p *= 7) {
    CHECK(u3[static_cast<std::size_t>(n)] == 3 * Rational(p));
    CHECK(u21[static_cast<std::size_t>(n)] == 2 * Rational(p));
  }
}

TEST_CASE("mmp decomposition") {
  const MmpDecomposition t = decompose_mmp(WindowPattern({1, 1, 1, 1}));
  CHECK(t.ok);
  CHECK(t.w == 1);
  CHECK(t.z == 2);
  CHECK(t.mmp_r == P("(x+1)(x^2-11x+2)"));
  for (int r = 1; r <= 6; ++r) {
    const MmpDecomposition s = decompose_mmp(WindowPattern({r}));
    CHECK(s.ok);
    CHECK(s.w == 0);
    CHECK(s.z == 0);
  }
  CHECK(decompose_mmp(WindowPattern({2, 2})).ok);
}

TEST_CASE("eigenvalue census") {
  const EigenCensus c3 = eigen_census(3);
  CHECK(c3.charpoly == P("x^2-7x"));
  CHECK(c3.e0 == 1);
  CHECK(c3.semisimple0);
  CHECK_FALSE(c3.other_multiple_roots);
  const EigenCensus c2 = eigen_census(2);
  CHECK(c2.e1 == 0);
  CHECK(c2.eneg1 == 0);
  CHECK(eigen_census(9).e0 == 2);
}

TEST_CASE("periodic functions and conjectured counts") {
  const PeriodicFn f{{Rational(0), make_rational(-1, 3), make_rational(1, 3)}};
  CHECK(f(5) == make_rational(1, 3));
  CHECK(f(-1) == make_rational(1, 3));
  CHECK_THROWS_AS(PeriodicFn{}(1), Error);
  CHECK(conjectured_e0_odd(9) == 2);
  CHECK(conjectured_e1_even(2) == 0);
  CHECK(conjectured_eneg1_even(8) == 1);
  const std::vector<int> mo{1, 2, 1, 3, 2, 4, 3, 5, 3, 5};
  for (int r = 1; r <= 10; ++r) CHECK(conjectured_min_order(r) == mo[static_cast<std::size_t>(r - 1)]);
}

TEST_CASE("conjecture census") {
  const ConjectureReport rep = conjecture_check(24, 4);
  CHECK(rep.all_pass());
  REQUIRE(rep.rows.size() == 24);
  for (int r = 1; r <= 10; ++r) CHECK(rep.rows[static_cast<std::size_t>(r - 1)].r == r);
  CHECK(rep.rows[7].eneg1 == 1);
  // Results do not depend on the worker count.
  const ConjectureReport serial = conjecture_check(12, 1);
  for (std::size_t i = 0; i < serial.rows.size(); ++i) CHECK(serial.rows[i].rmp == rep.rows[i].rmp);
}

TEST_CASE("triangle versus diatomic sums") {
  for (int r = 1; r <= 3; ++r) {
    const VrurResult v = vrur_check(r, 20);
    CHECK(v.series_ok);
    CHECK(v.prefix_matches_brute);
    CHECK(v.recurrence_ok);
  }
  const VrurResult v2 = vrur_check(2, 12);
  CHECK(v2.v[3] == 106);
  CHECK(v2.expected == P("(x-1)(x^2-5x+2)"));
  CHECK(v2.v[3] == 6 * v2.v[2] - 7 * v2.v[1] + 2 * v2.v[0]);
}

TEST_CASE("exponential fits") {
  const ExpFit a = exp_fit(3, 2, WindowPattern({1}));
  // u(n) = 8^n, the row sum: only c_3 survives.
  CHECK(a.coeffs == std::vector<Rational>{0, 0, 0, 1});
  const ExpFit b = exp_fit(1, 2, WindowPattern({4}));
  CHECK(b.coeffs == std::vector<Rational>{0, 1});
  const ExpFit c = exp_fit(2, 2, WindowPattern({2}));
  CHECK(c.values[1] == 6);
  CHECK(c.values[2] == 44);
  // u(n) = (2^n + 2 * 8^n) / 3.
  CHECK(c.coeffs == std::vector<Rational>{0, make_rational(1, 3), 0, make_rational(2, 3)});
  CHECK(c.even_indices_vanish);
  CHECK(c.matches_prediction);
  for (int d = 1; d <= 3; ++d)
    for (int base = 2; base <= 3; ++base)
      for (int r = 1; r <= 4; ++r) CHECK(exp_fit(d, base, WindowPattern({r})).matches_prediction);
  // With a prefactor no parity statement is made, but the fit still holds.
  const ExpFit q = exp_fit(2, 2, WindowPattern({2}), Poly{1, 1});
  CHECK_FALSE(q.predicted.has_value());
  CHECK_THROWS_AS(exp_fit(2, 1, WindowPattern({2})), Error);
}

TEST_CASE("multivariate recurrences") {
  const ProductSpec s(parse_poly("(1+x1+x2)^2"), MPoly::constant(2, 1), {2, 3});
  const MultivariateRmp m = multivariate_rmp(s, WindowPattern::single(2, 2));
  CHECK(m.rmp == P("x^2-23x+104"));
  CHECK(m.brute_values_agree);
  CHECK(m.brute_terms >= 5);
}
