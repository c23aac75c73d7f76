#include "nrf/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nrf {

Fp::Fp(std::int64_t v, std::uint64_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("Fp: modulus must be at least 2");
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  v_ = static_cast<std::uint64_t>(r);
}

void Fp::check(const Fp& o) const {
  if (p_ != o.p_ && p_ != 0 && o.p_ != 0) throw std::invalid_argument("Fp: modulus mismatch");
}

Fp Fp::operator+(const Fp& o) const {
  check(o);
  Fp r;
  r.p_ = p_ ? p_ : o.p_;
  r.v_ = (v_ + o.v_) % r.p_;
  return r;
}

Fp Fp::operator-(const Fp& o) const {
  check(o);
  Fp r;
  r.p_ = p_ ? p_ : o.p_;
  r.v_ = (v_ + r.p_ - o.v_ % r.p_) % r.p_;
  return r;
}

Fp Fp::operator*(const Fp& o) const {
  check(o);
  Fp r;
  r.p_ = p_ ? p_ : o.p_;
  r.v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % r.p_);
  return r;
}

Fp Fp::operator-() const {
  Fp r = *this;
  if (v_) r.v_ = p_ - v_;
  return r;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
  // Fermat: p is assumed prime.
  std::uint64_t e = p_ - 2, base = v_, acc = 1;
  while (e) {
    if (e & 1) acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * base) % p_);
    base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % p_);
    e >>= 1;
  }
  Fp r;
  r.p_ = p_;
  r.v_ = acc;
  return r;
}

Fp Fp::operator/(const Fp& o) const { return *this * o.inverse(); }

Matrix identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  Matrix out(a.rows(), b.cols());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) == 0) continue;
        t = x * y;
        out(i, j) += t;
      }
    }
  return out;
}

Vector apply(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      if (sgn(m(i, k)) != 0 && sgn(v[k]) != 0) out[i] += m(i, k) * v[k];
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

Matrix scale(const Matrix& a, const Rational& s) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  return out;
}

bool is_zero(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) return false;
  return true;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref_in_place(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

Matrix power(const Matrix& m, std::size_t e) {
  Matrix acc = identity(m.rows());
  Matrix base = m;
  while (e) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return acc;
}

Rational trace(const Matrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
  }
  os << "]";
  return os.str();
}

FpMatrix reduce_mod(const Matrix& m, std::uint64_t p) {
  FpMatrix out(m.rows(), m.cols(), Fp(0, p));
  mpz_class pz = static_cast<unsigned long>(p);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class num = m(i, j).get_num() % pz;
      mpz_class den = m(i, j).get_den() % pz;
      if (den == 0) throw std::domain_error("reduce_mod: denominator divisible by p");
      Fp n(num.get_si(), p), d(den.get_si(), p);
      out(i, j) = n / d;
    }
  return out;
}

void sparse_axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (sgn(a) == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Rational v = y[i].second + a * x[j].second;
      if (sgn(v) != 0) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace_back(i, v[i]);
  return s;
}

Vector to_dense(const SparseVec& v, std::size_t n) {
  Vector d(n);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

KernelResult<Rational> sparse_rank_and_kernel(std::vector<SparseVec> rows, std::size_t ncols) {
  // Forward elimination into rows keyed by pivot column, then full back
  // substitution so each pivot row is zero on every other pivot column.
  std::map<std::size_t, SparseVec> piv;
  for (auto& r : rows) {
    SparseVec v = std::move(r);
    while (!v.empty()) {
      auto it = piv.find(v.front().first);
      if (it == piv.end()) break;
      Rational f = -v.front().second;
      sparse_axpy(v, f, it->second);
    }
    if (v.empty()) continue;
    Rational inv = 1 / v.front().second;
    for (auto& e : v) e.second *= inv;
    piv.emplace(v.front().first, std::move(v));
  }
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    SparseVec& row = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 1; k < row.size(); ++k) {
        auto p = piv.find(row[k].first);
        if (p != piv.end() && p->first != it->first) {
          Rational f = -row[k].second;
          sparse_axpy(row, f, p->second);
          changed = true;
          break;
        }
      }
    }
  }
  KernelResult<Rational> out;
  out.rank = piv.size();
  std::vector<std::vector<std::pair<std::size_t, Rational>>> col_entries(ncols);
  for (const auto& [p, row] : piv)
    for (std::size_t k = 1; k < row.size(); ++k) col_entries[row[k].first].emplace_back(p, row[k].second);
  for (std::size_t f = 0; f < ncols; ++f) {
    if (piv.count(f)) continue;
    Vector v(ncols);
    v[f] = 1;
    for (const auto& [p, x] : col_entries[f]) v[p] = -x;
    out.kernel.push_back(std::move(v));
  }
  return out;
}

bool Echelon::insert(const Vector& v) {
  if (v.size() != n_) throw std::invalid_argument("Echelon: dimension mismatch");
  Vector r = v;
  Vector combo;
  if (track_) {
    combo.assign(inserted_ + 1, 0);
    combo[inserted_] = 1;
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (sgn(r[pivots_[i]]) == 0) continue;
    Rational f = r[pivots_[i]];
    for (std::size_t c = 0; c < n_; ++c)
      if (sgn(rows_[i][c]) != 0) r[c] -= f * rows_[i][c];
    if (track_)
      for (std::size_t c = 0; c < combos_[i].size(); ++c) combo[c] -= f * combos_[i][c];
  }
  std::size_t p = 0;
  while (p < n_ && sgn(r[p]) == 0) ++p;
  if (p == n_) return false;
  Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  if (track_)
    for (auto& x : combo) x *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  if (track_) combos_.push_back(std::move(combo));
  ++inserted_;
  return true;
}

Vector Echelon::reduce(const Vector& v) const {
  Vector r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (sgn(r[pivots_[i]]) == 0) continue;
    Rational f = r[pivots_[i]];
    for (std::size_t c = 0; c < n_; ++c)
      if (sgn(rows_[i][c]) != 0) r[c] -= f * rows_[i][c];
  }
  return r;
}

bool Echelon::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::optional<Vector> Echelon::coordinates(const Vector& v) const {
  if (!track_) throw std::logic_error("Echelon: coordinates need tracking");
  Vector r = v;
  Vector out(inserted_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (sgn(r[pivots_[i]]) == 0) continue;
    Rational f = r[pivots_[i]];
    for (std::size_t c = 0; c < n_; ++c)
      if (sgn(rows_[i][c]) != 0) r[c] -= f * rows_[i][c];
    for (std::size_t c = 0; c < combos_[i].size(); ++c) out[c] += f * combos_[i][c];
  }
  if (!is_zero(r)) return std::nullopt;
  return out;
}

}  // namespace nrf
