#include "stern/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stern/error.hpp"
#include "stern/number.hpp"

namespace stern {

WindowPattern::WindowPattern(std::vector<int> exponents)
    : extents_{static_cast<int>(exponents.size())}, cells_(std::move(exponents)) {
  trim();
}

WindowPattern::WindowPattern(std::vector<int> extents, std::vector<int> cells)
    : extents_(std::move(extents)), cells_(std::move(cells)) {
  if (extents_.empty()) throw Error(ErrorKind::InvalidArgument, "pattern needs at least one dimension");
  std::size_t total = 1;
  for (int e : extents_) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative pattern extent");
    total *= static_cast<std::size_t>(e);
  }
  if (total != cells_.size()) throw Error(ErrorKind::InvalidArgument, "pattern extents do not match cell count");
  trim();
}

WindowPattern WindowPattern::from_cells(int dims, const std::vector<std::pair<std::vector<int>, int>>& cells) {
  if (dims < 1) throw Error(ErrorKind::InvalidArgument, "pattern needs at least one dimension");
  std::vector<int> lo(dims, 0), hi(dims, 0);
  bool any = false;
  for (const auto& [off, e] : cells) {
    if (static_cast<int>(off.size()) != dims) throw Error(ErrorKind::DimensionMismatch, "cell offset arity");
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    if (e == 0) continue;
    for (int i = 0; i < dims; ++i) {
      lo[i] = any ? std::min(lo[i], off[i]) : off[i];
      hi[i] = any ? std::max(hi[i], off[i]) : off[i];
    }
    any = true;
  }
  if (!any) throw Error(ErrorKind::EmptyPattern, "pattern has no positive exponent");
  std::vector<int> extents(dims);
  std::size_t total = 1;
  for (int i = 0; i < dims; ++i) {
    extents[i] = hi[i] - lo[i] + 1;
    total *= static_cast<std::size_t>(extents[i]);
  }
  std::vector<int> dense(total, 0);
  for (const auto& [off, e] : cells) {
    if (e == 0) continue;
    std::size_t idx = 0;
    for (int i = 0; i < dims; ++i) idx = idx * static_cast<std::size_t>(extents[i]) + static_cast<std::size_t>(off[i] - lo[i]);
    dense[idx] += e;
  }
  return WindowPattern(std::move(extents), std::move(dense));
}

WindowPattern WindowPattern::single(int dims, int exponent) {
  if (exponent < 1) throw Error(ErrorKind::EmptyPattern, "single-site exponent must be positive");
  return WindowPattern(std::vector<int>(dims, 1), std::vector<int>{exponent});
}

int WindowPattern::weight() const { return std::accumulate(cells_.begin(), cells_.end(), 0); }

void WindowPattern::trim() {
  for (int c : cells_) {
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  }
  if (std::all_of(cells_.begin(), cells_.end(), [](int c) { return c == 0; })) {
    throw Error(ErrorKind::EmptyPattern, "pattern has no positive exponent");
  }
  if (extents_.size() == 1) {
    auto first = std::find_if(cells_.begin(), cells_.end(), [](int c) { return c != 0; });
    auto last = std::find_if(cells_.rbegin(), cells_.rend(), [](int c) { return c != 0; }).base();
    cells_ = std::vector<int>(first, last);
    extents_[0] = static_cast<int>(cells_.size());
    return;
  }
  const auto cells = support();
  const int d = dims();
  std::vector<int> lo = cells.front().first, hi = cells.front().first;
  for (const auto& [off, e] : cells) {
    for (int i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], off[i]);
      hi[i] = std::max(hi[i], off[i]);
    }
  }
  std::vector<int> extents(d);
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) {
    extents[i] = hi[i] - lo[i] + 1;
    total *= static_cast<std::size_t>(extents[i]);
  }
  if (extents == extents_) return;
  std::vector<int> dense(total, 0);
  for (const auto& [off, e] : cells) {
    std::size_t idx = 0;
    for (int i = 0; i < d; ++i) idx = idx * static_cast<std::size_t>(extents[i]) + static_cast<std::size_t>(off[i] - lo[i]);
    dense[idx] = e;
  }
  extents_ = std::move(extents);
  cells_ = std::move(dense);
}

std::vector<std::pair<std::vector<int>, int>> WindowPattern::support() const {
  std::vector<std::pair<std::vector<int>, int>> out;
  const int d = dims();
  std::vector<int> off(d, 0);
  for (std::size_t idx = 0; idx < cells_.size(); ++idx) {
    if (cells_[idx] != 0) out.emplace_back(off, cells_[idx]);
    for (int i = d - 1; i >= 0; --i) {
      if (++off[i] < extents_[i]) break;
      off[i] = 0;
    }
  }
  return out;
}

WindowPattern WindowPattern::reversed() const {
  // Reversing row-major order reflects every coordinate of the box.
  WindowPattern out = *this;
  std::reverse(out.cells_.begin(), out.cells_.end());
  return out;
}

WindowPattern WindowPattern::canonical(bool use_symmetry) const {
  if (!use_symmetry) return *this;
  WindowPattern r = reversed();
  return r < *this ? r : *this;
}

WindowPattern WindowPattern::display(bool use_symmetry) const {
  if (!use_symmetry) return *this;
  WindowPattern r = reversed();
  return *this < r ? r : *this;
}

std::string WindowPattern::to_string() const {
  std::ostringstream os;
  if (dims() == 1) {
    os << "(";
    for (std::size_t i = 0; i < cells_.size(); ++i) os << (i ? "," : "") << cells_[i];
    os << ")";
    return os.str();
  }
  os << "{";
  bool first = true;
  for (const auto& [off, e] : support()) {
    if (!first) os << ",";
    first = false;
    os << "[";
    for (std::size_t i = 0; i < off.size(); ++i) os << (i ? "," : "") << off[i];
    os << "]:" << e;
  }
  os << "}";
  return os.str();
}

WindowPattern canonicalize(std::vector<int> raw, bool use_symmetry) {
  return WindowPattern(std::move(raw)).canonical(use_symmetry);
}

WindowPattern canonicalize(std::vector<int> extents, std::vector<int> cells, bool use_symmetry) {
  return WindowPattern(std::move(extents), std::move(cells)).canonical(use_symmetry);
}

namespace {

std::vector<int> split_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    Integer v = parse_integer(item);
    if (!v.fits_sint_p()) throw Error(ErrorKind::ParseError, "pattern entry out of range");
    out.push_back(static_cast<int>(v.get_si()));
  }
  return out;
}

}  // namespace

WindowPattern parse_pattern(const std::string& text, int dims) {
  if (text.find('=') == std::string::npos) {
    std::vector<int> values = split_ints(text, ',');
    if (values.empty()) throw Error(ErrorKind::ParseError, "empty pattern");
    if (dims == 1) return WindowPattern(std::move(values));
    if (values.size() != 1) {
      throw Error(ErrorKind::ParseError, "multivariate patterns need explicit cells, e.g. \"0,0=2;1,0=1\"");
    }
    return WindowPattern::single(dims, values[0]);
  }
  std::vector<std::pair<std::vector<int>, int>> cells;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected offset=exponent in '" + item + "'");
    std::vector<int> off = split_ints(item.substr(0, eq), ',');
    if (static_cast<int>(off.size()) != dims) throw Error(ErrorKind::DimensionMismatch, "cell offset arity");
    cells.emplace_back(std::move(off), split_ints(item.substr(eq + 1), ',').at(0));
  }
  return WindowPattern::from_cells(dims, cells);
}

}  // namespace stern
