#include <doctest.h>

#include <random>

#include "stern/matrix.hpp"

using namespace stern;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> coef(lo, hi);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = coef(rng);
  return m;
}

}  // namespace

TEST_CASE("small characteristic and minimal polynomials") {
  const Matrix a2 = Matrix::from_rows({{3, 2}, {2, 2}});
  const Matrix a3 = Matrix::from_rows({{3, 6}, {2, 4}});
  CHECK(charpoly(a2) == Poly{2, -5, 1});
  CHECK(minpoly(a2) == Poly{2, -5, 1});
  CHECK(charpoly(a3) == Poly{0, -7, 1});
  CHECK(minpoly(a3) == Poly{0, -7, 1});
  CHECK(charpoly(Matrix::identity(2)) == Poly{1, -2, 1});
  for (std::size_t n : {1, 2, 5}) CHECK(minpoly(Matrix::identity(n)) == Poly{-1, 1});
  CHECK(minpoly(Matrix(3)) == Poly::x());
}

TEST_CASE("Jordan block is not semisimple") {
  const Matrix j = Matrix::from_rows({{2, 1, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(minpoly(j) == Poly::linear(2).pow(2));
  CHECK(charpoly(j) == Poly::linear(2).pow(3));
}

TEST_CASE("minpoly divides charpoly and annihilates") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 6;
    // Low-rank and repeated structure: product of thin random factors.
    Matrix m = random_matrix(rng, n, -2, 2);
    if (t % 3 == 0) m = m * m;
    const Poly mp = minpoly(m);
    CHECK(divides(mp, charpoly(m)));
    const Matrix z = evaluate(mp, m);
    CHECK(z == Matrix(n));
  }
}

TEST_CASE("charpoly of block lower-triangular matrices") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const std::size_t p = 1 + t % 3, q = 1 + (t / 3) % 3;
    const Matrix a = random_matrix(rng, p, -3, 3);
    const Matrix b = random_matrix(rng, q, -3, 3);
    const Matrix c = random_matrix(rng, p + q, -3, 3);
    Matrix m(p + q);
    for (std::size_t i = 0; i < p + q; ++i)
      for (std::size_t j = 0; j < p + q; ++j) {
        if (i < p && j < p) m(i, j) = a(i, j);
        else if (i >= p && j >= p) m(i, j) = b(i - p, j - p);
        else if (i >= p) m(i, j) = c(i, j);
      }
    CHECK(charpoly(m) == charpoly(a) * charpoly(b));
  }
}

TEST_CASE("linear solve") {
  const Matrix a = Matrix::from_rows({{2, 1}, {1, 3}});
  const std::vector<Rational> rhs{3, 5};
  const auto x = solve(a, rhs);
  CHECK(x[0] == make_rational(4, 5));
  CHECK(x[1] == make_rational(7, 5));
  CHECK_THROWS(solve(Matrix::from_rows({{1, 2}, {2, 4}}), rhs));
  CHECK_THROWS(Matrix::from_rows({{1, 2}, {3}}));
}
