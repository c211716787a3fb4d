#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "stern/matrix.hpp"
#include "stern/mpoly.hpp"
#include "stern/pattern.hpp"
#include "stern/powersums.hpp"

namespace stern {

// Finitely supported linear combination of window sums u_beta; all patterns
// canonical, no zero coefficients.
using PatternCombo = std::map<WindowPattern, Rational>;

// Writes the window sum of alpha over the array at generation n+1 as a
// combination of window sums at generation n, where the arrays are linked by
// g_k(n+1) = sum_j kernel_j * g_{(k-j)/b}(n) (terms with b not dividing k-j
// vanish). The position k is split by residue mod b, each factor becomes a
// linear form in the generation-n coefficients, and the expanded monomials
// are collected as translated patterns. A contraction of 1 with kernel q
// gives the change of variables for the prefactor q.
PatternCombo expand(const MPoly& kernel, const std::vector<int>& contraction, const WindowPattern& alpha,
                    bool use_symmetry);

// Longest pattern (1-D) appearing in an expansion.
int spread(const PatternCombo& combo);

struct TransferOptions {
  std::size_t closure_budget = 10000;
  // Generation-0 array; the single coefficient 1 when absent.
  std::optional<CoeffArray> initial;
};

// Finite linear system v(n+1) = A v(n) over the closure of the seed pattern.
// Row i of A is the expansion of closure[i]; the requested sum is
// front_end . v(n).
struct TransferSystem {
  ProductSpec spec;
  WindowPattern seed;
  bool use_symmetry = false;
  std::vector<WindowPattern> closure;
  Matrix matrix;
  std::vector<Rational> initial_vector;
  std::vector<Rational> front_end;

  std::size_t size() const { return closure.size(); }
  // Position of a (canonical) pattern in the closure, or size() if absent.
  std::size_t index_of(const WindowPattern& p) const;
};

// Presentation order of closure patterns: by length; length-2 patterns by
// their leading entry descending (4 < 31 < 22); length-3 patterns by middle
// entry descending, then lexicographically (121 < 211); longer ones
// lexicographically. Comparisons use the display orientation.
bool closure_before(const WindowPattern& a, const WindowPattern& b, bool use_symmetry);

// Breadth-first closure of the seed (through the prefactor front end) under
// expand with kernel p and contraction b. Throws SymmetryInvalid when the
// quotient by reflection is requested for a non-palindromic spec, and
// ClosureBudgetExceeded when the closure outgrows the budget.
TransferSystem build_system(const ProductSpec& spec, const WindowPattern& seed, bool use_symmetry,
                            const TransferOptions& options = {});

// u(0..n_max) = front_end . A^n v0.
std::vector<Rational> iterate(const TransferSystem& system, int n_max);

}  // namespace stern
