#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace stern {

// Exponent pattern applied to a window of coefficients. Stored as a dense
// box (extents per dimension, row-major cells); construction trims the box
// so that every face carries a positive exponent, which for one dimension
// means alpha_0 > 0 and alpha_{m-1} > 0.
class WindowPattern {
 public:
  // 1-D pattern; leading/trailing zeros are trimmed.
  explicit WindowPattern(std::vector<int> exponents);
  // d-D dense box; trimmed to the bounding box of the positive cells.
  WindowPattern(std::vector<int> extents, std::vector<int> cells);
  // Sparse d-D pattern from (offset, exponent) pairs.
  static WindowPattern from_cells(int dims, const std::vector<std::pair<std::vector<int>, int>>& cells);
  // The single-site pattern (r) in `dims` dimensions.
  static WindowPattern single(int dims, int exponent);

  int dims() const { return static_cast<int>(extents_.size()); }
  const std::vector<int>& extents() const { return extents_; }
  const std::vector<int>& cells() const { return cells_; }
  std::size_t cell_count() const { return cells_.size(); }
  int weight() const;
  // 1-D: the number of positions m; d-D: cells in the bounding box.
  int length() const { return static_cast<int>(cells_.size()); }
  bool is_single_site() const { return cells_.size() == 1; }

  // Positive cells with their offsets.
  std::vector<std::pair<std::vector<int>, int>> support() const;

  // Point reflection (reversal in 1-D).
  WindowPattern reversed() const;
  // With symmetry, the smaller of the pattern and its reflection.
  WindowPattern canonical(bool use_symmetry) const;
  // With symmetry, the larger orientation, e.g. 31 rather than 13.
  WindowPattern display(bool use_symmetry) const;

  auto operator<=>(const WindowPattern&) const = default;

  // "(2,1)" in 1-D; "{[0,0]:2,[1,0]:1}" otherwise.
  std::string to_string() const;

 private:
  void trim();
  std::vector<int> extents_;
  std::vector<int> cells_;
};

// Trims a raw exponent pattern and picks the canonical representative.
// Throws EmptyPattern when no entry is positive.
WindowPattern canonicalize(std::vector<int> raw, bool use_symmetry);
WindowPattern canonicalize(std::vector<int> extents, std::vector<int> cells, bool use_symmetry);

// Parses "2,1" (1-D) or "0,0=2;1,0=1" (cells with offsets).
WindowPattern parse_pattern(const std::string& text, int dims = 1);

}  // namespace stern
