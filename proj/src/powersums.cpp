#include "stern/powersums.hpp"

#include <algorithm>
#include <future>
#include <limits>

#include "stern/error.hpp"

namespace stern {

ProductSpec::ProductSpec(MPoly kernel, MPoly prefactor, std::vector<int> bases)
    : kernel_(std::move(kernel)), prefactor_(std::move(prefactor)), bases_(std::move(bases)) {
  if (kernel_.is_zero() || prefactor_.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "kernel and prefactor must be nonzero");
  }
  if (kernel_.vars() != prefactor_.vars()) {
    throw Error(ErrorKind::VariableMismatch, "kernel and prefactor have different variable counts");
  }
  if (bases_.size() == 1 && kernel_.vars() > 1) bases_.assign(static_cast<std::size_t>(kernel_.vars()), bases_[0]);
  if (static_cast<int>(bases_.size()) != kernel_.vars()) {
    throw Error(ErrorKind::VariableMismatch, "need one base per variable");
  }
  for (int b : bases_) {
    if (b < 1) throw Error(ErrorKind::InvalidArgument, "contraction bases must be >= 1");
  }
}

ProductSpec ProductSpec::stern() {
  return univariate(Poly{1, 1, 1}, Poly{1}, 2);
}

ProductSpec ProductSpec::univariate(const Poly& kernel, const Poly& prefactor, int base) {
  return ProductSpec(MPoly::from_univariate(kernel), MPoly::from_univariate(prefactor), {base});
}

ProductSpec ProductSpec::normalized() const {
  return ProductSpec(kernel_.strip_monomial(), prefactor_.strip_monomial(), bases_);
}

std::string ProductSpec::describe() const {
  std::string b;
  for (std::size_t i = 0; i < bases_.size(); ++i) b += (i ? "," : "") + std::to_string(bases_[i]);
  return "p=" + kernel_.to_string() + "; q=" + prefactor_.to_string() + "; b=(" + b + ")";
}

namespace {

std::size_t flat_index(const std::vector<std::size_t>& extents, const std::vector<std::size_t>& index) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < extents.size(); ++i) idx = idx * extents[i] + index[i];
  return idx;
}

// Advances a row-major multi-index; returns false after the last one.
bool next_index(std::vector<std::size_t>& index, const std::vector<std::size_t>& extents) {
  for (std::size_t i = extents.size(); i-- > 0;) {
    if (++index[i] < extents[i]) return true;
    index[i] = 0;
  }
  return false;
}

struct IntegralPoly {
  std::vector<std::pair<Exponent, Integer>> terms;
  Integer denominator;
  Exponent degrees;
};

IntegralPoly integral_form(const MPoly& p) {
  IntegralPoly out;
  std::vector<Rational> cs;
  for (const auto& [e, c] : p.terms()) cs.push_back(c);
  out.denominator = lcm_of_denominators(cs);
  for (const auto& [e, c] : p.terms()) {
    Integer v = c.get_num() * (out.denominator / c.get_den());
    out.terms.emplace_back(e, v);
  }
  out.degrees = p.max_degrees();
  return out;
}

// out(x) = poly(x) * arr(x^scale)
CoeffArray multiply_scaled(const IntegralPoly& poly, const CoeffArray& arr, const std::vector<int>& scale) {
  const std::size_t d = arr.extents.size();
  CoeffArray out;
  out.extents.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    out.extents[i] = static_cast<std::size_t>(poly.degrees[i]) + static_cast<std::size_t>(scale[i]) * (arr.extents[i] - 1) + 1;
  }
  std::size_t total = 1;
  for (auto e : out.extents) total *= e;
  out.numerators.assign(total, Integer(0));
  std::vector<std::size_t> idx(d, 0), target(d);
  std::size_t flat = 0;
  do {
    const Integer& g = arr.numerators[flat++];
    if (g == 0) continue;
    for (const auto& [e, c] : poly.terms) {
      for (std::size_t i = 0; i < d; ++i) target[i] = idx[i] * static_cast<std::size_t>(scale[i]) + static_cast<std::size_t>(e[i]);
      out.numerators[flat_index(out.extents, target)] += c * g;
    }
  } while (next_index(idx, arr.extents));
  out.denominator = arr.denominator * poly.denominator;
  out.generation = arr.generation;
  return out;
}

}  // namespace

Rational CoeffArray::at(const std::vector<std::size_t>& index) const {
  if (index.size() != extents.size()) throw Error(ErrorKind::DimensionMismatch, "index arity");
  for (std::size_t i = 0; i < index.size(); ++i)
    if (index[i] >= extents[i]) return Rational(0);
  return make_rational(numerators[flat_index(extents, index)], denominator);
}

CoeffArray CoeffArray::from_row(const ArrayRow& row) {
  CoeffArray out;
  out.extents = {row.entries.size()};
  out.numerators = row.entries;
  out.generation = row.n;
  return out;
}

CoeffArray CoeffArray::from_poly(const MPoly& p) {
  const IntegralPoly ip = integral_form(p.strip_monomial());
  CoeffArray unit;
  unit.extents.assign(static_cast<std::size_t>(p.vars()), 1);
  unit.numerators = {Integer(1)};
  return multiply_scaled(ip, unit, std::vector<int>(static_cast<std::size_t>(p.vars()), 1));
}

bool CoeffArray::palindromic() const {
  return std::equal(numerators.begin(), numerators.begin() + static_cast<std::ptrdiff_t>(numerators.size() / 2),
                    numerators.rbegin());
}

CoeffArray gen_coeffs(const ProductSpec& spec, int n, std::size_t budget) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "generation must be >= 0");
  const ProductSpec norm = spec.normalized();
  const IntegralPoly p = integral_form(norm.kernel());
  const IntegralPoly q = integral_form(norm.prefactor());
  const std::size_t d = static_cast<std::size_t>(norm.dims());

  // Projected support: 1 + deg q + deg p * (1 + b + ... + b^{n-1}) per variable.
  long double projected = 1;
  for (std::size_t i = 0; i < d; ++i) {
    long double span = 0, power = 1;
    for (int j = 0; j < n; ++j) {
      span += power;
      power *= norm.bases()[i];
    }
    projected *= 1 + q.degrees[i] + p.degrees[i] * span;
  }
  if (projected > static_cast<long double>(budget)) {
    throw Error(ErrorKind::SupportTooLarge,
                "generation " + std::to_string(n) + " of " + spec.describe() + " exceeds the support budget");
  }

  CoeffArray g;
  g.extents.assign(d, 1);
  g.numerators = {Integer(1)};
  const std::vector<int> unit(d, 1);
  for (int step = 0; step < n; ++step) g = multiply_scaled(p, g, norm.bases());
  CoeffArray f = multiply_scaled(q, g, unit);
  f.generation = n;
  return f;
}

namespace {

Integer window_sum_range(const CoeffArray& arr, const std::vector<std::pair<std::vector<int>, int>>& cells,
                         const std::vector<std::size_t>& positions, std::size_t first_lo, std::size_t first_hi) {
  Integer total = 0;
  if (first_hi <= first_lo) return total;
  const std::size_t d = arr.extents.size();
  if (d == 1) {
    Integer term, power;
    for (std::size_t k = first_lo; k < first_hi; ++k) {
      term = 1;
      for (const auto& [off, e] : cells) {
        const Integer& c = arr.numerators[k + static_cast<std::size_t>(off[0])];
        if (c == 0) {
          term = 0;
          break;
        }
        if (e == 1) {
          term *= c;
        } else {
          mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(e));
          term *= power;
        }
      }
      total += term;
    }
    return total;
  }
  std::vector<std::size_t> range = positions;
  range[0] = first_hi - first_lo;
  std::vector<std::size_t> k(d, 0), at(d);
  Integer term, power;
  do {
    term = 1;
    for (const auto& [off, e] : cells) {
      for (std::size_t i = 0; i < d; ++i) at[i] = k[i] + (i == 0 ? first_lo : 0) + static_cast<std::size_t>(off[i]);
      const Integer& c = arr.numerators[flat_index(arr.extents, at)];
      if (c == 0) {
        term = 0;
        break;
      }
      mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(e));
      term *= power;
    }
    total += term;
  } while (next_index(k, range));
  return total;
}

}  // namespace

Rational window_power_sum(const CoeffArray& arr, const WindowPattern& alpha, unsigned threads) {
  if (alpha.dims() != arr.dims()) {
    throw Error(ErrorKind::DimensionMismatch, "pattern has " + std::to_string(alpha.dims()) +
                                                  " dimensions, array has " + std::to_string(arr.dims()));
  }
  const std::size_t d = arr.extents.size();
  // Number of window placements per dimension that keep the box inside.
  std::vector<std::size_t> positions(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto ext = static_cast<std::size_t>(alpha.extents()[i]);
    if (arr.extents[i] < ext) return Rational(0);
    positions[i] = arr.extents[i] - ext + 1;
  }
  const auto cells = alpha.support();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(positions[0])));
  Integer total = 0;
  if (threads == 1) {
    total = window_sum_range(arr, cells, positions, 0, positions[0]);
  } else {
    std::vector<std::future<Integer>> parts;
    const std::size_t chunk = (positions[0] + threads - 1) / threads;
    for (std::size_t lo = 0; lo < positions[0]; lo += chunk) {
      const std::size_t hi = std::min(positions[0], lo + chunk);
      parts.push_back(std::async(std::launch::async, [&, lo, hi] { return window_sum_range(arr, cells, positions, lo, hi); }));
    }
    for (auto& f : parts) total += f.get();
  }
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), arr.denominator.get_mpz_t(), static_cast<unsigned long>(alpha.weight()));
  return make_rational(total, den);
}

std::size_t support_count(const CoeffArray& arr) {
  return static_cast<std::size_t>(
      std::count_if(arr.numerators.begin(), arr.numerators.end(), [](const Integer& c) { return c != 0; }));
}

std::vector<Rational> u_brute(const ProductSpec& spec, const WindowPattern& alpha, int n_max, std::size_t budget) {
  std::vector<Rational> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(window_power_sum(gen_coeffs(spec, n, budget), alpha));
  return out;
}

std::vector<Rational> v_brute(const WindowPattern& alpha, int n_max, std::size_t budget) {
  std::vector<Rational> out;
  for (int n = 0; n <= n_max; ++n) {
    std::size_t len = (n < 62) ? (std::size_t{1} << n) + 1 : std::numeric_limits<std::size_t>::max();
    if (len > budget) throw Error(ErrorKind::SupportTooLarge, "diatomic row exceeds the support budget");
    out.push_back(window_power_sum(CoeffArray::from_row(stern_row(n, RowKind::Diatomic)), alpha));
  }
  return out;
}

}  // namespace stern
