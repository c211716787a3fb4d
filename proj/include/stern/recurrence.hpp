#pragma once

#include <cstddef>
#include <span>

#include "stern/number.hpp"
#include "stern/poly.hpp"

namespace stern {

// Least-order constant-coefficient recurrence of a sequence: the monic
// characteristic polynomial (with nonzero constant term) and the first index
// from which it holds.
struct SequenceRecurrence {
  Poly charpoly;
  int n0 = 0;
};

// Plain Berlekamp-Massey over the rationals: x^L C(1/x) for the shortest
// recurrence generating all of seq, transient factors x^w included.
Poly berlekamp_massey(std::span<const Rational> seq, std::ptrdiff_t* last_discrepancy = nullptr);

// Berlekamp-Massey over the rationals on seq[start_index..], followed by
// stripping the x^w transient factor and pushing n0 back as far as the
// recurrence keeps holding. Throws InsufficientTerms when the discrepancy
// has not been zero throughout the final third of the tail.
SequenceRecurrence min_recurrence(std::span<const Rational> seq, int start_index = 0);

// True if sum_i r_i * seq[n + i] == 0 for every n >= from with n + deg(r) in range.
bool annihilates(const Poly& r, std::span<const Rational> seq, int from);

// Largest k with (x - theta)^k dividing p.
int root_multiplicity(const Poly& p, const Rational& theta);

}  // namespace stern
