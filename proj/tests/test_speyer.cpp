#include <doctest.h>

#include "stern/error.hpp"
#include "stern/speyer.hpp"
#include "stern/transfer.hpp"

using namespace stern;

TEST_CASE("small Speyer matrices") {
  const Matrix b1 = speyer_matrix(1);
  CHECK(b1 == Matrix::from_rows({{2, 1}, {1, 2}}));
  CHECK(charpoly(b1) == Poly::linear(1) * Poly::linear(3));
  for (int r = 1; r <= 8; ++r) CHECK(speyer_matrix(r)(static_cast<std::size_t>(r), static_cast<std::size_t>(r)) == 2);
}

TEST_CASE("diagonal symmetrization") {
  CHECK(diagonal_symmetrize(Matrix::from_rows({{2, 1}, {1, 2}})) == std::vector<Rational>{1, 1});
  CHECK(diagonal_symmetrize(Matrix::from_rows({{3, 2}, {2, 2}})) == std::vector<Rational>{1, 1});
  for (int r = 1; r <= 20; ++r) {
    const auto s = diagonal_symmetrize(speyer_matrix(r));
    for (int i = 0; i <= r; ++i)
      CHECK(s[static_cast<std::size_t>(i)] * Rational(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(i))) == 1);
  }
  CHECK_THROWS_AS(diagonal_symmetrize(Matrix::from_rows({{1, 1}, {0, 1}})), Error);
  CHECK_THROWS_AS(diagonal_symmetrize(Matrix::from_rows({{0, 1, 1}, {1, 0, 2}, {1, 1, 0}})), Error);
}

TEST_CASE("Speyer spectra") {
  for (int r = 1; r <= 16; ++r) {
    const Matrix b = speyer_matrix(r);
    const Poly m = minpoly(b);
    CHECK(gcd(m, m.derivative()).degree() == 0);
    // The eigenvalues of A_r are among those of B_r.
    CHECK(divides(charpoly(build_system(ProductSpec::stern(), WindowPattern({r}), true).matrix), charpoly(b)));
  }
}
