#include "stern/recurrence.hpp"

#include <string>
#include <vector>

#include "stern/error.hpp"

namespace stern {

namespace {

bool holds_at(const Poly& r, std::span<const Rational> seq, std::size_t n) {
  Rational acc = 0;
  for (int i = 0; i <= r.degree(); ++i) {
    if (r.coeffs()[i] != 0) acc += r.coeffs()[i] * seq[n + i];
  }
  return acc == 0;
}

}  // namespace

bool annihilates(const Poly& r, std::span<const Rational> seq, int from) {
  if (r.is_zero()) return true;
  const std::size_t deg = static_cast<std::size_t>(r.degree());
  for (std::size_t n = static_cast<std::size_t>(std::max(from, 0)); n + deg < seq.size(); ++n) {
    if (!holds_at(r, seq, n)) return false;
  }
  return true;
}

Poly berlekamp_massey(std::span<const Rational> seq, std::ptrdiff_t* last_discrepancy) {
  // Connection polynomial c (c[0] = 1) of current length len.
  std::vector<Rational> c{Rational(1)};
  std::vector<Rational> prev{Rational(1)};
  std::size_t len = 0;
  std::size_t shift = 1;
  Rational prev_disc = 1;
  std::ptrdiff_t last_nonzero = -1;

  for (std::size_t n = 0; n < seq.size(); ++n) {
    Rational d = seq[n];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) {
      if (c[i] != 0) d += c[i] * seq[n - i];
    }
    if (d == 0) {
      ++shift;
      continue;
    }
    last_nonzero = static_cast<std::ptrdiff_t>(n);
    Rational f = d / prev_disc;
    std::vector<Rational> next = c;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + shift] -= f * prev[i];
    if (2 * len <= n) {
      prev = c;
      len = n + 1 - len;
      prev_disc = d;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(next);
  }
  if (last_discrepancy) *last_discrepancy = last_nonzero;

  // R(x) = x^len * C(1/x)
  c.resize(len + 1);
  std::vector<Rational> r(len + 1);
  for (std::size_t i = 0; i <= len; ++i) r[len - i] = c[i];
  return Poly(std::move(r));
}

SequenceRecurrence min_recurrence(std::span<const Rational> seq, int start_index) {
  if (start_index < 0 || static_cast<std::size_t>(start_index) >= seq.size()) {
    throw Error(ErrorKind::InsufficientTerms, "start index beyond the supplied terms");
  }
  std::span<const Rational> tail = seq.subspan(static_cast<std::size_t>(start_index));
  const std::size_t m = tail.size();
  std::ptrdiff_t last_nonzero = -1;
  const Poly r = berlekamp_massey(tail, &last_nonzero);
  const std::size_t len = static_cast<std::size_t>(r.degree());

  const std::size_t settled = m - static_cast<std::size_t>(last_nonzero + 1);
  if (settled * 3 < m || m < 2 * len + 1) {
    throw Error(ErrorKind::InsufficientTerms,
                "recurrence not stable over the final third (" + std::to_string(m) + " terms, order " +
                    std::to_string(len) + ")");
  }

  // A zero constant term of R marks a transient.
  std::size_t w = 0;
  while (w < len && r.coeffs()[w] == 0) ++w;
  Poly reduced(std::vector<Rational>(r.coeffs().begin() + static_cast<std::ptrdiff_t>(w), r.coeffs().end()));

  int n0 = start_index + static_cast<int>(w);
  while (n0 > 0 && static_cast<std::size_t>(n0 - 1 + reduced.degree()) < seq.size() &&
         holds_at(reduced, seq, static_cast<std::size_t>(n0 - 1))) {
    --n0;
  }
  if (!annihilates(reduced, seq, n0)) {
    throw Error(ErrorKind::InsufficientTerms, "recovered recurrence fails on the supplied terms");
  }
  return {reduced, n0};
}

int root_multiplicity(const Poly& p, const Rational& theta) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root multiplicity of the zero polynomial");
  int k = 0;
  Poly q = p;
  const Poly lin = Poly::linear(theta);
  while (q.degree() >= 1 && q(theta) == 0) {
    q = exact_div(q, lin);
    ++k;
  }
  return k;
}

}  // namespace stern
