#pragma once

#include <vector>

#include "stern/matrix.hpp"

namespace stern {

// Matrix of phi(f)(x, y) = f(x+y, y) + f(x, x+y) on homogeneous polynomials
// of degree r, in the basis x^i y^{r-i} (i = 0..r); column i is the image of
// the i-th basis monomial.
Matrix speyer_matrix(int r);

// Positive rationals s_i = d_i^2 with s_i * B(i,j) == s_j * B(j,i) for all
// i, j and s_0 = 1, so that D B D^{-1} is symmetric for D = diag(d_i).
// Propagates along a spanning forest of the support graph and checks every
// remaining edge; throws NotSymmetrizable naming the first violating edge.
std::vector<Rational> diagonal_symmetrize(const Matrix& b);

}  // namespace stern
