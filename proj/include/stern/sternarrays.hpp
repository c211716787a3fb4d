#pragma once

#include <cstddef>
#include <vector>

#include "stern/number.hpp"

namespace stern {

enum class RowKind { Triangle, Diatomic };
enum class RowMethod { Recursive, Product };

inline constexpr std::size_t kDefaultEntryBudget = std::size_t{1} << 24;

struct ArrayRow {
  RowKind kind = RowKind::Triangle;
  int n = 0;
  std::vector<Integer> entries;
};

// Row n of Stern's triangle (2^{n+1}-1 entries) or of the diatomic array
// (2^n+1 entries). The product method expands prod_{i<n}(1+x^{2^i}+x^{2*2^i})
// and is only defined for the triangle.
ArrayRow stern_row(int n, RowKind kind, RowMethod method = RowMethod::Recursive,
                   std::size_t entry_budget = kDefaultEntryBudget);

// Number of ways to write k with parts 1, 2, 4, ..., 2^{n-1}, each used at
// most twice, by direct enumeration.
Integer partition_count(int n, long k);

// Merging the diatomic rows R0 R1 ... R_{n-1} R_{n-1} ... R0 at their shared
// end 1's reproduces triangle row n.
bool concat_check(int n, std::size_t entry_budget = kDefaultEntryBudget);

// First k terms of the limiting (diatomic) sequence b_0, b_1, ...; throws
// InvalidArgument if a pair of consecutive terms is not coprime.
std::vector<Integer> limit_prefix(std::size_t k);

}  // namespace stern
