#include "stern/matrix.hpp"

#include <random>
#include <utility>

#include "stern/error.hpp"
#include "stern/recurrence.hpp"

namespace stern {

Matrix::Matrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be >= 1");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorKind::InvalidArgument, "matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return from_rows(r);
}

std::vector<Rational> Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != n_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match matrix");
  std::vector<Rational> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (a_[i * n_ + j] != 0 && v[j] != 0) acc += a_[i * n_ + j] * v[j];
    }
    out[i] = acc;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (o.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "matrix sizes differ");
  Matrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += x * o(k, j);
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::is_integral() const {
  for (const auto& x : a_)
    if (x.get_den() != 1) return false;
  return true;
}

Poly charpoly(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix h = m;
  // Reduce to upper Hessenberg form by elementary similarity transforms.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = n;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (h(i, j) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) continue;
    if (pivot != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(pivot, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, pivot), h(r, j + 1));
    }
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h(i, j) == 0) continue;
      Rational t = h(i, j) / h(j + 1, j);
      for (std::size_t c = 0; c < n; ++c) h(i, c) -= t * h(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += t * h(r, i);
    }
  }
  // p_k = charpoly of the leading k x k block.
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(1));
  for (std::size_t k = 0; k < n; ++k) {
    Poly next = Poly::linear(h(k, k)) * p[k];
    Rational prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod == 0) break;
      if (h(i, k) != 0) next -= p[i] * (h(i, k) * prod);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

namespace {

// Incremental row echelon basis. Each stored row optionally carries a
// polynomial recording how it was produced from a Krylov sequence.
struct Echelon {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> pivots;
  std::vector<Poly> exprs;

  // Reduces v in place (and expr alongside); returns true if v became zero.
  bool reduce(std::vector<Rational>& v, Poly* expr) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::size_t p = pivots[r];
      if (v[p] == 0) continue;
      Rational f = v[p] / rows[r][p];
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (rows[r][c] != 0) v[c] -= f * rows[r][c];
      }
      if (expr) *expr -= exprs[r] * f;
    }
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }

  void add(std::vector<Rational> v, Poly expr) {
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    // Keep earlier rows reduced against the new pivot so reduce() needs a
    // single pass.
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][p] == 0) continue;
      Rational f = rows[r][p] / v[p];
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] != 0) rows[r][c] -= f * v[c];
      }
      exprs[r] -= expr * f;
    }
    // Rows may be rescaled freely (reduce only uses ratios); a primitive
    // integer row keeps the entries small.
    Integer den = 1, content = 0;
    for (const auto& x : v) {
      if (x == 0) continue;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num_mpz_t());
    }
    const Rational scale = make_rational(den, content);
    if (scale != 1) {
      for (auto& x : v) x *= scale;
      expr *= scale;
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    exprs.push_back(std::move(expr));
  }
};

Poly krylov_with_span(const Matrix& m, std::vector<Rational> w, Echelon* span) {
  Echelon basis;
  for (int k = 0;; ++k) {
    std::vector<Rational> reduced = w;
    Poly expr = Poly::monomial(Rational(1), k);
    if (basis.reduce(reduced, &expr)) return expr.monic();
    if (span) {
      std::vector<Rational> s = w;
      if (!span->reduce(s, nullptr)) span->add(std::move(s), Poly());
    }
    basis.add(std::move(reduced), std::move(expr));
    w = m.apply(w);
  }
}

}  // namespace

Poly krylov_annihilator(const Matrix& m, std::span<const Rational> v) {
  if (v.size() != m.size()) throw Error(ErrorKind::DimensionMismatch, "vector length does not match matrix");
  return krylov_with_span(m, std::vector<Rational>(v.begin(), v.end()), nullptr);
}

namespace {

// p(m) applied to v, by Horner.
std::vector<Rational> apply_poly(const Poly& p, const Matrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> w(v.size());
  for (int k = p.degree(); k >= 0; --k) {
    w = m.apply(w);
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c != 0)
      for (std::size_t i = 0; i < v.size(); ++i) w[i] += c * v[i];
  }
  return w;
}

bool annihilates_matrix(const Poly& p, const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> e(n);
    e[i] = 1;
    for (const auto& x : apply_poly(p, m, e))
      if (x != 0) return false;
  }
  return true;
}

Poly minpoly_krylov(const Matrix& m) {
  const std::size_t n = m.size();
  // `covered` spans the Krylov spaces already processed. It is invariant
  // under m and annihilated by the running lcm, so unit vectors inside it
  // cannot contribute new factors.
  Echelon covered;
  Poly result = Poly::constant(1);
  for (std::size_t i = 0; i < n && covered.rows.size() < n; ++i) {
    std::vector<Rational> e(n);
    e[i] = 1;
    std::vector<Rational> probe = e;
    if (covered.reduce(probe, nullptr)) continue;
    result = lcm(result, krylov_with_span(m, std::move(e), &covered));
  }
  return result;
}

}  // namespace

Poly minpoly(const Matrix& m) {
  // Each scalar sequence u^T m^k v has a minimal polynomial dividing that of
  // m; once the lcm of a few of them annihilates m, the two coincide. The
  // projection vectors come from a fixed seed so results are reproducible;
  // the Krylov lcm over unit vectors is the fallback.
  const std::size_t n = m.size();
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> small(-9, 9);
  Poly candidate = Poly::constant(1);
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<Rational> u(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = small(rng);
      w[i] = small(rng);
    }
    std::vector<Rational> seq;
    for (std::size_t k = 0; k < 2 * n; ++k) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += u[i] * w[i];
      seq.push_back(s);
      w = m.apply(w);
    }
    const Poly p = berlekamp_massey(seq);
    if (p.degree() < 1) continue;
    candidate = lcm(candidate, p.monic());
    if (annihilates_matrix(candidate, m)) return candidate;
  }
  return minpoly_krylov(m);
}

Matrix evaluate(const Poly& p, const Matrix& m) {
  Matrix acc(m.size());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.size(); ++i) acc(i, i) += p.coeff(k);
  }
  return acc;
}

std::vector<Rational> solve(const Matrix& a, std::span<const Rational> rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n] = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::InvalidArgument, "singular system");
    std::swap(aug[piv], aug[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rational f = aug[r][col] / aug[col][col];
      for (std::size_t c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n] / aug[i][i];
  return x;
}

}  // namespace stern
