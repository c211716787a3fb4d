#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stern/matrix.hpp"
#include "stern/pattern.hpp"
#include "stern/poly.hpp"
#include "stern/powersums.hpp"
#include "stern/recurrence.hpp"
#include "stern/transfer.hpp"

namespace stern {

// mmp: minimal polynomial of the transfer matrix. rmp: least-order
// recurrence of the actual value sequence (which can miss factors of mmp
// because of the particular initial vector).
struct RecurrenceReport {
  WindowPattern alpha;
  ProductSpec spec;
  bool use_symmetry = false;
  Poly mmp;
  Poly rmp;
  int n0 = 0;
  std::size_t closure_size = 0;
  bool divisibility_ok = false;
  std::vector<Rational> values;
};

struct ReportOptions {
  // Defaults to the reflection quotient whenever the spec is palindromic.
  std::optional<bool> use_symmetry;
  // Cap for the doubling retry on InsufficientTerms.
  int max_terms = 4096;
  TransferOptions transfer;
};

RecurrenceReport recurrence_report(const ProductSpec& spec, const WindowPattern& alpha, const ReportOptions& options = {});

// Least recurrence of front_end . A^n v0, starting past the nilpotent part.
SequenceRecurrence system_recurrence(const TransferSystem& system, std::vector<Rational>* values = nullptr,
                                     int max_terms = 4096);

struct MmpDecomposition {
  int w = 0;
  int z = 0;
  bool ok = false;
  Poly mmp_alpha;
  Poly mmp_r;
};

// For the Stern spec: mmp(alpha) = x^w (x-1)^z mmp(|alpha|)?
MmpDecomposition decompose_mmp(const WindowPattern& alpha);

// A_r: the transfer matrix of alpha = (r) for the Stern spec, reflection
// quotient applied.
TransferSystem stern_power_system(int r);

struct EigenCensus {
  int r = 0;
  Poly charpoly;
  Poly minpoly;
  int e0 = 0;
  int e1 = 0;
  int eneg1 = 0;
  bool semisimple0 = true;
  bool semisimple1 = true;
  bool semisimple_neg1 = true;
  // charpoly with the 0, 1, -1 parts removed still has a repeated factor.
  bool other_multiple_roots = false;
};

EigenCensus eigen_census(int r);

// [a_0, ..., a_{q-1}]_q evaluated at s: a_{s mod q}.
struct PeriodicFn {
  std::vector<Rational> values;
  Rational operator()(long s) const;
};

// Conjectured eigenvalue counts and recurrence orders.
Rational conjectured_e0_odd(int r);     // r = 2s-1
Rational conjectured_e1_even(int r);    // r = 2s
Rational conjectured_eneg1_even(int r); // r = 2s
int conjectured_min_order(int r);

struct ConjectureRow {
  int r = 0;
  std::size_t closure_size = 0;
  int deg_rmp = 0;
  int mo_expected = 0;
  int e0 = 0, e1 = 0, eneg1 = 0;
  Rational e0_expected, e1_expected, eneg1_expected;
  bool counts_ok = false;
  bool semisimple_ok = false;
  bool no_other_multiples = false;
  bool mo_ok = false;
  // (x - 1) does not divide rmp (even r); trivially true for odd r.
  bool superfluous_one_ok = false;
  Poly rmp;

  bool pass() const { return counts_ok && semisimple_ok && no_other_multiples && mo_ok && superfluous_one_ok; }
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;  // sorted by r
  std::vector<std::string> mismatches;
  bool all_pass() const { return mismatches.empty(); }
};

ConjectureReport conjecture_check(int r_max, unsigned threads = 1);
ConjectureRow conjecture_row(int r);

struct VrurResult {
  int r = 0;
  int order = 0;
  bool series_ok = false;
  // Transfer values agree with direct summation on the computable prefix.
  bool prefix_matches_brute = false;
  int brute_terms = 0;
  Poly v_recurrence;
  Poly expected;  // (x - 1) * rmp_r
  bool recurrence_ok = false;
  std::vector<Rational> u;
  std::vector<Rational> v;
};

// Power sums over the diatomic rows 0..n_max, driven by a Stern transfer
// system whose closure patterns all have length <= 2.
std::vector<Rational> diatomic_sums(const TransferSystem& system, int n_max);

// The analogue of recurrence_report for sums over the diatomic rows; mmp is
// that of the affine state matrix [[A, -2], [0, 1]].
RecurrenceReport diatomic_report(const WindowPattern& alpha);

// Checks 2V(x)/(1-x) = (U(x)-1)/x + (1+x)/(1-x)^2 through x^order, where U
// and V are the generating functions of the r-th power sums of the triangle
// and of the diatomic array.
VrurResult vrur_check(int r, int order);

struct ExpFit {
  int d = 0;
  int b = 0;
  WindowPattern alpha;
  Poly prefactor;
  // u(n) = sum_i coeffs[i] * b^{i n}, i = 0 .. 1 + (d-1)|alpha|.
  std::vector<Rational> coeffs;
  std::vector<Rational> values;
  bool even_indices_vanish = false;
  bool odd_indices_vanish = false;
  // 'e': c_i = 0 for even i is predicted; 'o': for odd i; absent when no
  // parity statement applies (q != 1 or a multi-site pattern).
  std::optional<char> predicted;
  bool matches_prediction = true;
};

inline constexpr int kHeldOutValues = 3;

// Exact fit for p = (1 + x + ... + x^{b-1})^d; throws FitInconsistent if the
// held-out values disagree with the fit.
ExpFit exp_fit(int d, int b, const WindowPattern& alpha, const Poly& prefactor = Poly{1});

struct MultivariateRmp {
  Poly rmp;
  int n0 = 0;
  std::size_t closure_size = 0;
  int brute_terms = 0;
  bool brute_values_agree = false;
  std::optional<Poly> brute_rmp;
};

MultivariateRmp multivariate_rmp(const ProductSpec& spec, const WindowPattern& alpha,
                                 std::size_t brute_budget = std::size_t{1} << 20);

}  // namespace stern
