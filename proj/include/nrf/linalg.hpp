#pragma once

// Exact linear algebra over the rationals and over prime fields.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nrf {

using Rational = mpq_class;

/// Element of the prime field Z/p. The modulus travels with the value so
/// that mixed-modulus arithmetic is caught instead of silently wrapping.
class Fp {
public:
  Fp() = default;
  Fp(std::int64_t v, std::uint64_t p);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator/(const Fp& o) const;
  Fp operator-() const;
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  bool operator==(const Fp& o) const { return v_ == o.v_; }
  Fp inverse() const;

private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
  void check(const Fp& o) const;
};

namespace field {
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline Rational inverse(const Rational& x) { return 1 / x; }
inline Fp inverse(const Fp& x) { return x.inverse(); }
}  // namespace field

template <class T>
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& zero = T())
      : rows_(rows), cols_(cols), data_(rows * cols, zero) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<Rational>;
using Vector = std::vector<Rational>;
using FpMatrix = DenseMatrix<Fp>;

// Row-reduces `m` in place to reduced row echelon form and returns the
// pivot column of each nonzero row.
template <class T>
std::vector<std::size_t> rref_in_place(DenseMatrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && field::is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    T inv = field::inverse(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || field::is_zero(m(r, col))) continue;
      T f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!field::is_zero(m(row, c))) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
struct KernelResult {
  std::size_t rank = 0;
  std::vector<std::vector<T>> kernel;
};

template <class T>
KernelResult<T> rank_and_kernel(DenseMatrix<T> m, const T& zero = T(), const T& one = T(1)) {
  auto pivots = rref_in_place(m);
  KernelResult<T> out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), zero);
    v[f] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = zero - m(r, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

template <class T>
std::optional<std::vector<T>> solve(const DenseMatrix<T>& a, const std::vector<T>& b,
                                    const T& zero = T()) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  DenseMatrix<T> aug(a.rows(), a.cols() + 1, zero);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref_in_place(aug);
  std::vector<T> x(a.cols(), zero);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;
    x[pivots[r]] = aug(r, a.cols());
  }
  return x;
}

template <class T>
std::size_t rank(DenseMatrix<T> m) {
  return rref_in_place(m).size();
}

// Rational helpers.
Matrix identity(std::size_t n);
Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
Vector apply(const Matrix& m, const Vector& v);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Rational& s);
bool is_zero(const Matrix& m);
bool is_zero(const Vector& v);
std::optional<Matrix> inverse(const Matrix& m);
Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
Matrix power(const Matrix& m, std::size_t e);
Rational trace(const Matrix& m);
std::string to_string(const Matrix& m);

FpMatrix reduce_mod(const Matrix& m, std::uint64_t p);

/// Sparse vector as (index, value) pairs sorted by index with no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

void sparse_axpy(SparseVec& y, const Rational& a, const SparseVec& x);
SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, std::size_t n);

/// Null space of the system given by sparse rows over `ncols` unknowns.
KernelResult<Rational> sparse_rank_and_kernel(std::vector<SparseVec> rows, std::size_t ncols);

/// Incrementally maintained row echelon basis of a subspace of K^n.
/// Optionally records, for every echelon row, its expression in terms of
/// the vectors that were inserted, so membership tests can return
/// coordinates.
class Echelon {
public:
  explicit Echelon(std::size_t n, bool track = false) : n_(n), track_(track) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }

  /// Inserts v; returns true iff v was independent of the current span.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  Vector reduce(const Vector& v) const;
  /// Coefficients c with v = sum c_i * inserted_i over the independent
  /// inserted vectors, or nullopt if v is outside the span. Needs `track`.
  std::optional<Vector> coordinates(const Vector& v) const;
  std::size_t inserted() const { return inserted_; }

private:
  std::size_t n_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> combos_;
};

}  // namespace nrf
