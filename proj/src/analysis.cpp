#include "stern/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "stern/error.hpp"
#include "stern/parallel.hpp"
#include "stern/sternarrays.hpp"

namespace stern {

namespace {

// (x - theta)^k
Poly linear_power(const Rational& theta, int k) { return Poly::linear(theta).pow(static_cast<unsigned>(k)); }

Poly strip_root(const Poly& p, const Rational& theta, int k) { return k > 0 ? exact_div(p, linear_power(theta, k)) : p; }

bool squarefree(const Poly& p) { return p.degree() <= 0 || gcd(p, p.derivative()).degree() == 0; }

}  // namespace

SequenceRecurrence system_recurrence(const TransferSystem& system, std::vector<Rational>* values, int max_terms) {
  const int start = static_cast<int>(system.size()) + 1;
  int n_max = start + 2 * static_cast<int>(system.size()) + 8;
  for (;;) {
    std::vector<Rational> seq = iterate(system, n_max);
    try {
      SequenceRecurrence rec = min_recurrence(seq, start);
      if (values) *values = std::move(seq);
      return rec;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InsufficientTerms || n_max >= max_terms) throw;
      n_max = std::min(2 * n_max, max_terms);
    }
  }
}

RecurrenceReport recurrence_report(const ProductSpec& spec, const WindowPattern& alpha, const ReportOptions& options) {
  RecurrenceReport report{alpha, spec, false, Poly{}, Poly{}, 0, 0, false, {}};
  report.use_symmetry = options.use_symmetry.value_or(spec.palindromic() && alpha.dims() == 1 &&
                                                      (!options.transfer.initial || options.transfer.initial->palindromic()));
  const TransferSystem system = build_system(spec, alpha, report.use_symmetry, options.transfer);
  report.closure_size = system.size();
  const SequenceRecurrence rec = system_recurrence(system, &report.values, options.max_terms);
  report.rmp = rec.charpoly;
  report.n0 = rec.n0;
  report.mmp = minpoly(system.matrix);
  report.divisibility_ok = divides(report.rmp, report.mmp);
  return report;
}

TransferSystem stern_power_system(int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "power must be >= 1");
  return build_system(ProductSpec::stern(), WindowPattern({r}), true);
}

MmpDecomposition decompose_mmp(const WindowPattern& alpha) {
  MmpDecomposition res;
  res.mmp_alpha = minpoly(build_system(ProductSpec::stern(), alpha, true).matrix);
  res.mmp_r = minpoly(stern_power_system(alpha.weight()).matrix);
  res.w = root_multiplicity(res.mmp_alpha, Rational(0)) - root_multiplicity(res.mmp_r, Rational(0));
  res.z = root_multiplicity(res.mmp_alpha, Rational(1)) - root_multiplicity(res.mmp_r, Rational(1));
  if (res.w < 0 || res.z < 0) return res;
  const Poly rest = strip_root(strip_root(res.mmp_alpha, Rational(0), res.w), Rational(1), res.z);
  res.ok = rest == res.mmp_r;
  return res;
}

EigenCensus eigen_census(int r) {
  EigenCensus c;
  c.r = r;
  const TransferSystem system = stern_power_system(r);
  c.charpoly = charpoly(system.matrix);
  c.minpoly = minpoly(system.matrix);
  c.e0 = root_multiplicity(c.charpoly, Rational(0));
  c.e1 = root_multiplicity(c.charpoly, Rational(1));
  c.eneg1 = root_multiplicity(c.charpoly, Rational(-1));
  c.semisimple0 = root_multiplicity(c.minpoly, Rational(0)) <= 1;
  c.semisimple1 = root_multiplicity(c.minpoly, Rational(1)) <= 1;
  c.semisimple_neg1 = root_multiplicity(c.minpoly, Rational(-1)) <= 1;
  Poly rest = strip_root(c.charpoly, Rational(0), c.e0);
  rest = strip_root(rest, Rational(1), c.e1);
  rest = strip_root(rest, Rational(-1), c.eneg1);
  c.other_multiple_roots = !squarefree(rest);
  return c;
}

Rational PeriodicFn::operator()(long s) const {
  if (values.empty()) throw Error(ErrorKind::InvalidArgument, "periodic function needs a period >= 1");
  const long q = static_cast<long>(values.size());
  return values[static_cast<std::size_t>(((s % q) + q) % q)];
}

Rational conjectured_e0_odd(int r) {
  const long s = (r + 1) / 2;
  static const PeriodicFn shift{{Rational(0), Rational(-1, 3), Rational(1, 3)}};
  return make_rational(s, 3) + shift(s);
}

Rational conjectured_e1_even(int r) {
  const long s = r / 2;
  static const PeriodicFn shift{
      {Rational(-1), Rational(-1, 6), Rational(-1, 3), Rational(-1, 2), Rational(-2, 3), Rational(1, 6)}};
  return make_rational(s, 6) + shift(s);
}

Rational conjectured_eneg1_even(int r) { return conjectured_e1_even(r + 6); }

int conjectured_min_order(int r) {
  if (r == 2) return 2;
  if (r == 6) return 4;
  if (r % 2 == 0) return 2 * (r / 2 / 3) + 3;
  switch (r % 6) {
    case 1: return 2 * (r / 6) + 1;
    case 3: return 2 * (r / 6) + 1;
    default: return 2 * (r / 6) + 2;
  }
}

ConjectureRow conjecture_row(int r) {
  ConjectureRow row;
  row.r = r;
  const EigenCensus c = eigen_census(r);
  const TransferSystem system = stern_power_system(r);
  row.closure_size = system.size();
  row.rmp = system_recurrence(system).charpoly;
  row.deg_rmp = row.rmp.degree();
  row.mo_expected = conjectured_min_order(r);
  row.mo_ok = row.deg_rmp == row.mo_expected;
  row.e0 = c.e0;
  row.e1 = c.e1;
  row.eneg1 = c.eneg1;
  Poly rest = c.charpoly;
  if (r % 2 == 1) {
    row.e0_expected = conjectured_e0_odd(r);
    row.e1_expected = 0;
    row.counts_ok = Rational(c.e0) == row.e0_expected && c.e1 == 0;
    row.semisimple_ok = c.semisimple0;
    rest = strip_root(rest, Rational(0), c.e0);
    row.superfluous_one_ok = true;
  } else {
    row.e1_expected = conjectured_e1_even(r);
    row.eneg1_expected = conjectured_eneg1_even(r);
    row.counts_ok = Rational(c.e1) == row.e1_expected && Rational(c.eneg1) == row.eneg1_expected;
    row.semisimple_ok = c.semisimple1 && c.semisimple_neg1;
    rest = strip_root(strip_root(rest, Rational(1), c.e1), Rational(-1), c.eneg1);
    row.superfluous_one_ok = root_multiplicity(row.rmp, Rational(1)) == 0;
  }
  row.no_other_multiples = squarefree(rest);
  return row;
}

ConjectureReport conjecture_check(int r_max, unsigned threads) {
  ConjectureReport report;
  if (r_max < 1) return report;
  report.rows.resize(static_cast<std::size_t>(r_max));
  parallel_for(report.rows.size(), threads, [&](std::size_t i) { report.rows[i] = conjecture_row(static_cast<int>(i) + 1); });
  for (const ConjectureRow& row : report.rows) {
    auto miss = [&](const std::string& what) {
      report.mismatches.push_back("r=" + std::to_string(row.r) + ": " + what);
    };
    if (!row.counts_ok) {
      std::ostringstream os;
      os << "eigenvalue counts e0=" << row.e0 << " e1=" << row.e1 << " e-1=" << row.eneg1 << " differ from the formula";
      miss(os.str());
    }
    if (!row.semisimple_ok) miss("eigenvalue 0/1/-1 not semisimple");
    if (!row.no_other_multiples) miss("repeated eigenvalue outside {0, 1, -1}");
    if (!row.mo_ok)
      miss("deg rmp " + std::to_string(row.deg_rmp) + " but expected order " + std::to_string(row.mo_expected));
    if (!row.superfluous_one_ok) miss("(x-1) divides rmp");
  }
  return report;
}

namespace {

}  // namespace

// Power sums over the diatomic rows. Applying the zero-padded recursion to
// row n gives [1, row n+1, 1]; for closure patterns of length <= 2 the two
// extra end windows each contribute exactly 1, so
// v(n+1) = A v(n) - 2 * (1, ..., 1).
std::vector<Rational> diatomic_sums(const TransferSystem& system, int n_max) {
  const ProductSpec stern = ProductSpec::stern();
  if (!(system.spec.kernel() == stern.kernel() && system.spec.prefactor() == stern.prefactor() &&
        system.spec.bases() == stern.bases()))
    throw Error(ErrorKind::InvalidArgument, "diatomic sums need the Stern spec");
  for (const auto& p : system.closure)
    if (p.length() > 2) throw Error(ErrorKind::InvalidArgument, "diatomic sums need closure patterns of length <= 2");
  const CoeffArray row0 = CoeffArray::from_row(stern_row(0, RowKind::Diatomic));
  std::vector<Rational> v(system.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = window_power_sum(row0, system.closure[i]);
  std::vector<Rational> out;
  for (int n = 0;; ++n) {
    Rational total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) total += system.front_end[i] * v[i];
    out.push_back(total);
    if (n == n_max) break;
    v = system.matrix.apply(v);
    for (auto& x : v) x -= 2;
  }
  return out;
}

RecurrenceReport diatomic_report(const WindowPattern& alpha) {
  const ProductSpec spec = ProductSpec::stern();
  if (alpha.dims() != 1) throw Error(ErrorKind::DimensionMismatch, "the diatomic array is 1-D");
  RecurrenceReport report{alpha, spec, true, Poly{}, Poly{}, 0, 0, false, {}};
  const TransferSystem system = build_system(spec, alpha, true);
  const std::size_t n = system.size();
  report.closure_size = n;
  // State (v, 1) evolves under [[A, -2], [0, 1]].
  Matrix m(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = system.matrix(i, j);
    m(i, n) = -2;
  }
  m(n, n) = 1;
  const int states = static_cast<int>(n) + 1;
  report.values = diatomic_sums(system, 4 * states + 16);
  const SequenceRecurrence rec = min_recurrence(report.values, states + 1);
  report.rmp = rec.charpoly;
  report.n0 = rec.n0;
  report.mmp = minpoly(m);
  report.divisibility_ok = divides(report.rmp, report.mmp);
  return report;
}

VrurResult vrur_check(int r, int order) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "power must be >= 1");
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
  VrurResult res;
  res.r = r;
  res.order = order;
  const ProductSpec spec = ProductSpec::stern();
  const WindowPattern alpha({r});
  const TransferSystem system = stern_power_system(r);

  // Enough terms for the recurrence of v as well (one more state than A_r).
  const int states = static_cast<int>(system.size()) + 1;
  const int n_terms = std::max(order, 4 * states + 16);
  res.u = iterate(system, order + 1);
  const std::vector<Rational> v_long = diatomic_sums(system, n_terms);
  res.v.assign(v_long.begin(), v_long.begin() + order + 1);

  // Cross-check both sequences against direct summation while rows stay small.
  const int brute_n = std::min(order, 14);
  const std::vector<Rational> ub = u_brute(spec, alpha, brute_n + 1);
  const std::vector<Rational> vb = v_brute(alpha, brute_n);
  res.brute_terms = brute_n + 1;
  res.prefix_matches_brute = std::equal(ub.begin(), ub.end(), res.u.begin()) && std::equal(vb.begin(), vb.end(), res.v.begin());

  // Coefficient of x^n on each side, n = 0..order:
  // 2 * sum_{i<=n} v(i)  versus  u(n+1) + (2n + 1).
  bool ok = res.u[0] == 1;
  Rational partial = 0;
  for (int n = 0; n <= order && ok; ++n) {
    partial += res.v[static_cast<std::size_t>(n)];
    ok = 2 * partial == res.u[static_cast<std::size_t>(n) + 1] + Rational(2 * n + 1);
  }
  res.series_ok = ok;

  res.v_recurrence = min_recurrence(v_long, states + 1).charpoly;
  res.expected = Poly::linear(Rational(1)) * system_recurrence(system).charpoly;
  res.recurrence_ok = res.v_recurrence == res.expected;
  return res;
}

ExpFit exp_fit(int d, int b, const WindowPattern& alpha, const Poly& prefactor) {
  if (d < 1 || b < 2) throw Error(ErrorKind::InvalidArgument, "exp_fit needs d >= 1 and b >= 2");
  if (alpha.dims() != 1) throw Error(ErrorKind::DimensionMismatch, "exp_fit takes a 1-D pattern");
  ExpFit fit{d, b, alpha, prefactor, {}, {}, false, false, std::nullopt, true};

  std::vector<Rational> ones(static_cast<std::size_t>(b), Rational(1));
  const Poly kernel = Poly(ones).pow(static_cast<unsigned>(d));
  const ProductSpec spec = ProductSpec::univariate(kernel, prefactor, b);
  const bool sym = spec.palindromic();
  const TransferSystem system = build_system(spec, alpha, sym);

  const int n_coeffs = 2 + (d - 1) * alpha.weight();  // c_0 .. c_N
  fit.values = iterate(system, n_coeffs - 1 + kHeldOutValues);

  // Vandermonde system in the nodes b^i.
  std::vector<Integer> nodes(static_cast<std::size_t>(n_coeffs));
  for (int i = 0; i < n_coeffs; ++i) mpz_ui_pow_ui(nodes[static_cast<std::size_t>(i)].get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(i));
  Matrix vander(static_cast<std::size_t>(n_coeffs));
  for (int n = 0; n < n_coeffs; ++n) {
    for (int i = 0; i < n_coeffs; ++i) {
      Integer x;
      mpz_pow_ui(x.get_mpz_t(), nodes[static_cast<std::size_t>(i)].get_mpz_t(), static_cast<unsigned long>(n));
      vander(static_cast<std::size_t>(n), static_cast<std::size_t>(i)) = Rational(x);
    }
  }
  fit.coeffs = solve(vander, std::span<const Rational>(fit.values.data(), static_cast<std::size_t>(n_coeffs)));

  for (int n = n_coeffs; n < n_coeffs + kHeldOutValues; ++n) {
    Rational predicted = 0;
    for (int i = 0; i < n_coeffs; ++i) {
      Integer x;
      mpz_pow_ui(x.get_mpz_t(), nodes[static_cast<std::size_t>(i)].get_mpz_t(), static_cast<unsigned long>(n));
      predicted += fit.coeffs[static_cast<std::size_t>(i)] * Rational(x);
    }
    if (predicted != fit.values[static_cast<std::size_t>(n)])
      throw Error(ErrorKind::FitInconsistent, "exponential fit misses held-out value u(" + std::to_string(n) + ")");
  }

  fit.even_indices_vanish = fit.odd_indices_vanish = true;
  for (int i = 0; i < n_coeffs; ++i) {
    if (fit.coeffs[static_cast<std::size_t>(i)] == 0) continue;
    (i % 2 == 0 ? fit.even_indices_vanish : fit.odd_indices_vanish) = false;
  }
  if (prefactor == Poly{1} && alpha.is_single_site()) {
    const int r = alpha.weight();
    fit.predicted = (r % 2 == 0 || d % 2 == 1) ? 'e' : 'o';
    fit.matches_prediction = *fit.predicted == 'e' ? fit.even_indices_vanish : fit.odd_indices_vanish;
  }
  return fit;
}

MultivariateRmp multivariate_rmp(const ProductSpec& spec, const WindowPattern& alpha, std::size_t brute_budget) {
  MultivariateRmp res;
  ReportOptions options;
  options.use_symmetry = false;
  const RecurrenceReport report = recurrence_report(spec, alpha, options);
  res.rmp = report.rmp;
  res.n0 = report.n0;
  res.closure_size = report.closure_size;

  // Brute force over as many generations as the budget allows.
  std::vector<Rational> brute;
  for (int n = 0;; ++n) {
    try {
      const CoeffArray arr = gen_coeffs(spec, n, brute_budget);
      brute.push_back(window_power_sum(arr, alpha));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SupportTooLarge) throw;
      break;
    }
    if (n + 1 >= static_cast<int>(report.values.size())) break;
  }
  res.brute_terms = static_cast<int>(brute.size());
  res.brute_values_agree = std::equal(brute.begin(), brute.end(), report.values.begin());
  try {
    res.brute_rmp = min_recurrence(brute, 0).charpoly;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InsufficientTerms) throw;
  }
  return res;
}

}  // namespace stern
