#include <doctest.h>

#include <numeric>

#include "stern/error.hpp"
#include "stern/sternarrays.hpp"

using namespace stern;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("printed rows") {
  CHECK(stern_row(3, RowKind::Triangle).entries == ints({1, 1, 2, 1, 3, 2, 3, 1, 3, 2, 3, 1, 2, 1, 1}));
  CHECK(stern_row(4, RowKind::Diatomic).entries == ints({1, 5, 4, 7, 3, 8, 5, 7, 2, 7, 5, 8, 3, 7, 4, 5, 1}));
  CHECK(stern_row(0, RowKind::Triangle, RowMethod::Product).entries == ints({1}));
  CHECK(stern_row(0, RowKind::Diatomic).entries == ints({1, 1}));
}

TEST_CASE("shape, palindromes and row sums") {
  Integer three = 1;
  for (int n = 0; n <= 12; ++n, three *= 3) {
    const auto t = stern_row(n, RowKind::Triangle).entries;
    CHECK(t.size() == (std::size_t{2} << n) - 1);
    CHECK(std::equal(t.begin(), t.end(), t.rbegin()));
    CHECK(std::accumulate(t.begin(), t.end(), Integer(0)) == three);
    CHECK(t == stern_row(n, RowKind::Triangle, RowMethod::Product).entries);
    const auto d = stern_row(n, RowKind::Diatomic).entries;
    CHECK(d.size() == (std::size_t{1} << n) + 1);
    CHECK(std::equal(d.begin(), d.end(), d.rbegin()));
    CHECK(d.front() == 1);
    CHECK(d.back() == 1);
  }
}

TEST_CASE("budget and method checks") {
  CHECK_THROWS_AS(stern_row(10, RowKind::Triangle, RowMethod::Recursive, 100), Error);
  CHECK_THROWS_AS(stern_row(2, RowKind::Diatomic, RowMethod::Product), Error);
}

TEST_CASE("partition counts") {
  CHECK(partition_count(2, 4) == 2);
  CHECK(partition_count(3, 7) == 1);
  CHECK(partition_count(3, 15) == 0);
  CHECK(partition_count(3, -1) == 0);
  for (int n = 1; n <= 8; ++n) {
    CHECK(partition_count(n, 0) == 1);
    const auto row = stern_row(n, RowKind::Triangle).entries;
    for (long k = 0; k < static_cast<long>(row.size()); ++k) CHECK(row[static_cast<std::size_t>(k)] == partition_count(n, k));
  }
}

TEST_CASE("concatenation of diatomic rows") {
  for (int n = 1; n <= 8; ++n) CHECK(concat_check(n));
}

TEST_CASE("limiting sequence") {
  CHECK(limit_prefix(8) == ints({1, 1, 2, 1, 3, 2, 3, 1}));
  CHECK(limit_prefix(1) == ints({1}));
  const auto b = limit_prefix(64);
  REQUIRE(b.size() == 64);
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), b[k].get_mpz_t(), b[k + 1].get_mpz_t());
    CHECK(g == 1);
  }
}
