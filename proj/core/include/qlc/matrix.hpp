#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qlc/error.hpp"
#include "qlc/scalar.hpp"

namespace qlc {

/// Dense row-major matrix over a commutative ring T (Scalar, MPoly,
/// BinaryForm). T{} must act as zero.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw_invalid("matrix.shape", "entry count does not match shape");
  }
  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw_invalid("matrix.ragged", "rows of different length");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<T>& entries() const noexcept { return a_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  template <class S>
  Matrix& scale(const S& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw_invalid("matrix.shape", "product of incompatible shapes");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
        }
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw_invalid("matrix.shape", "shapes differ");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using ScalarMatrix = Matrix<Scalar>;

template <class T, class S>
Matrix<T> operator*(Matrix<T> m, const S& s) {
  return m.scale(s);
}

/// All minors of a square matrix (n <= 8), indexed by (row mask, column
/// mask) with equal popcounts. Filled by Laplace expansion along the last
/// row of each row subset, reusing the minors one size smaller.
template <class T>
class MinorTable {
 public:
  explicit MinorTable(const Matrix<T>& m) : n_(m.rows()) {
    if (!m.is_square() || n_ > 8) throw_invalid("matrix.minors", "minor table needs a square matrix of size <= 8");
    const std::size_t full = std::size_t{1} << n_;
    v_.assign(full * full, T{});
    for (std::size_t k = 1; k <= n_; ++k) {
      for (std::uint32_t rm = 0; rm < full; ++rm) {
        if (static_cast<std::size_t>(std::popcount(rm)) != k) continue;
        const std::size_t last = 31 - static_cast<std::size_t>(std::countl_zero(rm));
        const std::uint32_t rest = rm & ~(1u << last);
        for (std::uint32_t cm = 0; cm < full; ++cm) {
          if (static_cast<std::size_t>(std::popcount(cm)) != k) continue;
          T acc{};
          if (k == 1) {
            acc = m(last, static_cast<std::size_t>(std::countr_zero(cm)));
          } else {
            // sign of column c within cm: position from the left among k, last row is position k-1
            std::size_t pos = 0;
            for (std::size_t c = 0; c < n_; ++c) {
              if (!(cm >> c & 1u)) continue;
              const T& x = m(last, c);
              if (!x.is_zero()) {
                const T& sub = get(rest, cm & ~(1u << c));
                if (!sub.is_zero()) {
                  T term = x * sub;
                  if ((pos + k - 1) % 2 == 0) acc += term;
                  else acc -= term;
                }
              }
              ++pos;
            }
          }
          at(rm, cm) = std::move(acc);
        }
      }
    }
  }

  std::size_t size() const noexcept { return n_; }
  const T& get(std::uint32_t rows, std::uint32_t cols) const { return v_[rows * (std::size_t{1} << n_) + cols]; }
  const T& det() const {
    std::uint32_t f = (1u << n_) - 1;
    return get(f, f);
  }

 private:
  T& at(std::uint32_t r, std::uint32_t c) { return v_[r * (std::size_t{1} << n_) + c]; }
  std::size_t n_;
  std::vector<T> v_;
};

/// Determinant over any commutative ring by cofactor expansion (size <= 8).
template <class T>
T det(const Matrix<T>& m) {
  if (!m.is_square()) throw_invalid("matrix.not_square", "determinant of a non-square matrix");
  if (m.rows() == 0) throw_invalid("matrix.empty", "determinant of an empty matrix");
  return MinorTable<T>(m).det();
}

/// Classical adjoint: M * adj(M) = det(M) * I.
template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
  if (!m.is_square()) throw_invalid("matrix.not_square", "adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> adj(n, n);
  if (n == 1) {
    throw_invalid("matrix.adjugate_1x1", "adjugate needs size >= 2");
  }
  MinorTable<T> t(m);
  const std::uint32_t full = (1u << n) - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T c = t.get(full & ~(1u << j), full & ~(1u << i));
      if ((i + j) % 2) c = -c;
      adj(i, j) = std::move(c);
    }
  return adj;
}

// Field algorithms over Q(i).
Scalar det(const ScalarMatrix& m);
std::size_t rank(const ScalarMatrix& m);
/// Basis of {x : M x = 0}, each vector a column, in reduced echelon form.
std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m);
/// Throws kDegenerate when singular.
ScalarMatrix inverse(const ScalarMatrix& m);
/// Some solution of M x = b, or nullopt.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& m, const std::vector<Scalar>& b);
std::vector<Scalar> mat_vec(const ScalarMatrix& m, const std::vector<Scalar>& v);
Scalar trace(const ScalarMatrix& m);
ScalarMatrix diagonal(const std::vector<Scalar>& d);
/// True iff a = c * b for a nonzero scalar c.
bool proportional(const ScalarMatrix& a, const ScalarMatrix& b);

}  // namespace qlc
