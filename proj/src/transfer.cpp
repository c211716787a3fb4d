#include "stern/transfer.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "stern/error.hpp"

namespace stern {

namespace {

using Offset = std::vector<int>;
using LinearForm = std::map<Offset, Rational>;

// Floor-safe residue test and exact quotient for possibly negative values.
bool divisible(int value, int base) { return ((value % base) + base) % base == 0; }

}  // namespace

PatternCombo expand(const MPoly& kernel, const std::vector<int>& contraction, const WindowPattern& alpha,
                    bool use_symmetry) {
  const int d = kernel.vars();
  if (alpha.dims() != d) throw Error(ErrorKind::DimensionMismatch, "pattern and kernel dimensions differ");
  if (static_cast<int>(contraction.size()) != d) throw Error(ErrorKind::VariableMismatch, "one contraction per variable");
  for (int b : contraction) {
    if (b < 1) throw Error(ErrorKind::InvalidArgument, "contraction entries must be >= 1");
  }
  if (kernel.constant_term() == 0) {
    throw Error(ErrorKind::KernelConstantTermZero, "kernel " + kernel.to_string() + " has zero constant term");
  }
  const auto cells = alpha.support();

  PatternCombo out;
  std::vector<int> residue(d, 0);
  while (true) {
    // One linear form per positive cell of the window.
    std::vector<LinearForm> forms;
    bool vanishes = false;
    for (const auto& [t, e] : cells) {
      LinearForm form;
      for (const auto& [j, c] : kernel.terms()) {
        Offset i(d);
        bool ok = true;
        for (int k = 0; k < d; ++k) {
          const int num = residue[k] + t[k] - j[k];
          if (!divisible(num, contraction[k])) {
            ok = false;
            break;
          }
          i[k] = num / contraction[k];
        }
        if (ok) form[i] += c;
      }
      std::erase_if(form, [](const auto& kv) { return kv.second == 0; });
      if (form.empty()) {
        vanishes = true;
        break;
      }
      forms.push_back(std::move(form));
    }

    if (!vanishes) {
      std::vector<Offset> vars;
      for (const auto& f : forms)
        for (const auto& [i, c] : f) vars.push_back(i);
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      auto var_index = [&](const Offset& i) {
        return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), i) - vars.begin());
      };

      std::map<std::vector<int>, Rational> poly{{std::vector<int>(vars.size(), 0), Rational(1)}};
      for (std::size_t f = 0; f < forms.size(); ++f) {
        std::vector<std::pair<std::size_t, Rational>> terms;
        for (const auto& [i, c] : forms[f]) terms.emplace_back(var_index(i), c);
        for (int rep = 0; rep < cells[f].second; ++rep) {
          std::map<std::vector<int>, Rational> next;
          for (const auto& [mono, c] : poly) {
            for (const auto& [v, coef] : terms) {
              std::vector<int> m = mono;
              ++m[v];
              next[std::move(m)] += c * coef;
            }
          }
          std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
          poly = std::move(next);
        }
      }
      for (const auto& [mono, c] : poly) {
        std::vector<std::pair<std::vector<int>, int>> pattern_cells;
        for (std::size_t v = 0; v < vars.size(); ++v) {
          if (mono[v] > 0) pattern_cells.emplace_back(vars[v], mono[v]);
        }
        WindowPattern beta = WindowPattern::from_cells(d, pattern_cells).canonical(use_symmetry);
        out[beta] += c;
      }
    }

    int k = d - 1;
    for (; k >= 0; --k) {
      if (++residue[k] < contraction[k]) break;
      residue[k] = 0;
    }
    if (k < 0) break;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

int spread(const PatternCombo& combo) {
  int s = 0;
  for (const auto& [p, c] : combo) s = std::max(s, p.length());
  return s;
}

std::size_t TransferSystem::index_of(const WindowPattern& p) const {
  for (std::size_t i = 0; i < closure.size(); ++i)
    if (closure[i] == p) return i;
  return closure.size();
}

bool closure_before(const WindowPattern& a, const WindowPattern& b, bool use_symmetry) {
  if (a.length() != b.length()) return a.length() < b.length();
  const WindowPattern da = a.display(use_symmetry);
  const WindowPattern db = b.display(use_symmetry);
  if (a.dims() == 1) {
    // Length-3 children of (a,b,c) have middle entry >= b, so this keeps the
    // length-3 block triangular.
    if (a.length() == 2 && da.cells()[0] != db.cells()[0]) return da.cells()[0] > db.cells()[0];
    if (a.length() == 3 && da.cells()[1] != db.cells()[1]) return da.cells()[1] > db.cells()[1];
  }
  return da < db;
}

TransferSystem build_system(const ProductSpec& spec, const WindowPattern& seed, bool use_symmetry,
                            const TransferOptions& options) {
  const ProductSpec norm = spec.normalized();
  const int d = norm.dims();
  if (seed.dims() != d) throw Error(ErrorKind::DimensionMismatch, "seed pattern and spec dimensions differ");

  CoeffArray initial;
  if (options.initial) {
    initial = *options.initial;
    if (initial.dims() != d) throw Error(ErrorKind::DimensionMismatch, "initial array dimension");
  } else {
    initial.extents.assign(static_cast<std::size_t>(d), 1);
    initial.numerators = {Integer(1)};
  }
  if (use_symmetry && !(norm.palindromic() && initial.palindromic())) {
    throw Error(ErrorKind::SymmetryInvalid, "reflection symmetry requested for non-palindromic " + spec.describe());
  }

  const WindowPattern alpha = seed.canonical(use_symmetry);
  const PatternCombo front = expand(norm.prefactor(), std::vector<int>(static_cast<std::size_t>(d), 1), alpha, use_symmetry);

  std::map<WindowPattern, PatternCombo> expansions;
  std::deque<WindowPattern> queue;
  std::set<WindowPattern> seen;
  auto visit = [&](const WindowPattern& p) {
    if (seen.count(p)) return;
    if (seen.size() >= options.closure_budget) {
      throw Error(ErrorKind::ClosureBudgetExceeded,
                  "closure of " + seed.to_string() + " exceeds " + std::to_string(options.closure_budget) + " patterns");
    }
    seen.insert(p);
    queue.push_back(p);
  };
  for (const auto& [p, c] : front) visit(p);
  // q annihilates every pattern (e.g. q(1) = 0 with alpha = (1)): u is
  // identically zero, but keep alpha so the system is not empty.
  if (front.empty()) visit(alpha);
  while (!queue.empty()) {
    WindowPattern p = queue.front();
    queue.pop_front();
    PatternCombo combo = expand(norm.kernel(), norm.bases(), p, use_symmetry);
    for (const auto& [child, c] : combo) visit(child);
    expansions.emplace(std::move(p), std::move(combo));
  }

  std::vector<WindowPattern> closure(seen.begin(), seen.end());
  std::stable_sort(closure.begin(), closure.end(), [&](const WindowPattern& a, const WindowPattern& b) {
    return closure_before(a, b, use_symmetry);
  });
  std::map<WindowPattern, std::size_t> index;
  for (std::size_t i = 0; i < closure.size(); ++i) index.emplace(closure[i], i);

  Matrix a(closure.size());
  std::vector<Rational> v0(closure.size()), l(closure.size());
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (const auto& [child, c] : expansions.at(closure[i])) a(i, index.at(child)) = c;
    v0[i] = window_power_sum(initial, closure[i]);
  }
  for (const auto& [p, c] : front) l[index.at(p)] = c;

  return TransferSystem{norm, alpha, use_symmetry, std::move(closure), std::move(a), std::move(v0), std::move(l)};
}

std::vector<Rational> iterate(const TransferSystem& system, int n_max) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 0");
  const std::size_t n = system.size();
  // Work with integers: A = A_int / da, v0 = v_int / dv, L = l_int / dl.
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries.push_back(system.matrix(i, j));
  const Integer da = lcm_of_denominators(entries);
  const Integer dv = lcm_of_denominators(system.initial_vector);
  const Integer dl = lcm_of_denominators(system.front_end);

  std::vector<std::vector<std::pair<std::size_t, Integer>>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = system.matrix(i, j);
      if (x != 0) rows[i].emplace_back(j, x.get_num() * (da / x.get_den()));
    }
  std::vector<Integer> v(n), l(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = system.initial_vector[i].get_num() * (dv / system.initial_vector[i].get_den());
    l[i] = system.front_end[i].get_num() * (dl / system.front_end[i].get_den());
  }

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  Integer scale = dv * dl;
  std::vector<Integer> next(n);
  for (int step = 0; step <= n_max; ++step) {
    Integer dot = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (l[i] != 0) dot += l[i] * v[i];
    out.push_back(make_rational(dot, scale));
    if (step == n_max) break;
    for (std::size_t i = 0; i < n; ++i) {
      Integer acc = 0;
      for (const auto& [j, c] : rows[i]) acc += c * v[j];
      next[i] = std::move(acc);
    }
    std::swap(v, next);
    scale *= da;
  }
  return out;
}

}  // namespace stern
