#include "stern/sternarrays.hpp"

#include <string>

#include "stern/error.hpp"

namespace stern {

namespace {

std::size_t row_length(int n, RowKind kind) {
  if (n >= 62) return static_cast<std::size_t>(-1);
  return kind == RowKind::Triangle ? (std::size_t{1} << (n + 1)) - 1 : (std::size_t{1} << n) + 1;
}

std::vector<Integer> triangle_recursive(int n) {
  std::vector<Integer> row{Integer(1)};
  for (int level = 0; level < n; ++level) {
    std::vector<Integer> next;
    next.reserve(2 * row.size() + 1);
    next.emplace_back(1);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) next.push_back(row[k - 1] + row[k]);
      next.push_back(row[k]);
    }
    next.emplace_back(1);
    row = std::move(next);
  }
  return row;
}

std::vector<Integer> triangle_product(int n) {
  std::vector<Integer> acc{Integer(1)};
  for (int i = 0; i < n; ++i) {
    const std::size_t step = std::size_t{1} << i;
    std::vector<Integer> next(acc.size() + 2 * step);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += acc[k];
      next[k + step] += acc[k];
      next[k + 2 * step] += acc[k];
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<Integer> diatomic_recursive(int n) {
  std::vector<Integer> row{Integer(1), Integer(1)};
  for (int level = 0; level < n; ++level) {
    std::vector<Integer> next;
    next.reserve(2 * row.size() - 1);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) next.push_back(row[k - 1] + row[k]);
      next.push_back(row[k]);
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

ArrayRow stern_row(int n, RowKind kind, RowMethod method, std::size_t entry_budget) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "row index must be >= 0");
  const std::size_t len = row_length(n, kind);
  if (len > entry_budget) {
    throw Error(ErrorKind::RowTooLarge,
                "row " + std::to_string(n) + " exceeds the entry budget of " + std::to_string(entry_budget));
  }
  ArrayRow out{kind, n, {}};
  if (kind == RowKind::Diatomic) {
    if (method == RowMethod::Product) {
      throw Error(ErrorKind::InvalidArgument, "the product method applies to the triangle only");
    }
    out.entries = diatomic_recursive(n);
  } else {
    out.entries = method == RowMethod::Product ? triangle_product(n) : triangle_recursive(n);
  }
  return out;
}

Integer partition_count(int n, long k) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "partition_count needs n >= 0");
  if (k < 0) return 0;
  // Enumerate multiplicities m_i in {0,1,2} of part 2^i, largest part first.
  Integer count = 0;
  auto rec = [&](auto&& self, int i, long remaining) -> void {
    if (i < 0) {
      if (remaining == 0) ++count;
      return;
    }
    const long part = 1L << i;
    for (long mult = 0; mult <= 2 && mult * part <= remaining; ++mult) self(self, i - 1, remaining - mult * part);
  };
  rec(rec, n - 1, k);
  return count;
}

bool concat_check(int n, std::size_t entry_budget) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "concat_check needs n >= 1");
  std::vector<std::vector<Integer>> rows;
  for (int i = 0; i < n; ++i) rows.push_back(stern_row(i, RowKind::Diatomic, RowMethod::Recursive, entry_budget).entries);
  std::vector<Integer> merged;
  auto append = [&](const std::vector<Integer>& r) {
    // Each row starts with the 1 that closed the previous one.
    std::size_t from = merged.empty() ? 0 : 1;
    if (!merged.empty() && (merged.back() != 1 || r.front() != 1)) from = 0;
    merged.insert(merged.end(), r.begin() + static_cast<std::ptrdiff_t>(from), r.end());
  };
  for (int i = 0; i < n; ++i) append(rows[i]);
  for (int i = n; i-- > 0;) append(rows[i]);
  return merged == stern_row(n, RowKind::Triangle, RowMethod::Recursive, entry_budget).entries;
}

std::vector<Integer> limit_prefix(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "limit_prefix needs k >= 1");
  int n = 0;
  while ((std::size_t{1} << n) < k) ++n;
  std::vector<Integer> row = stern_row(n, RowKind::Triangle).entries;
  row.resize(k);
  for (std::size_t i = 0; i + 1 < row.size(); ++i) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), row[i].get_mpz_t(), row[i + 1].get_mpz_t());
    if (g != 1) {
      throw Error(ErrorKind::InvalidArgument, "consecutive terms " + std::to_string(i) + " not coprime");
    }
  }
  return row;
}

}  // namespace stern
