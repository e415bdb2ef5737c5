#include <algorithm>
#include <utility>

#include "qlc/matrix.hpp"

namespace qlc {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(ScalarMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Scalar det(const ScalarMatrix& m) {
  if (!m.is_square()) throw_invalid("matrix.not_square", "determinant of a non-square matrix");
  ScalarMatrix a = m;
  const std::size_t n = a.rows();
  Scalar d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

std::size_t rank(const ScalarMatrix& m) {
  ScalarMatrix a = m;
  return rref(a).size();
}

std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m) {
  ScalarMatrix a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(a.cols());
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

ScalarMatrix inverse(const ScalarMatrix& m) {
  if (!m.is_square()) throw_invalid("matrix.not_square", "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ScalarMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = Scalar(1);
  }
  auto pivots = rref(a);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw_degenerate("matrix.singular", "matrix is singular");
  ScalarMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

std::optional<std::vector<Scalar>> solve(const ScalarMatrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw_invalid("matrix.shape", "right-hand side length mismatch");
  ScalarMatrix a(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    a(i, m.cols()) = b[i];
  }
  auto pivots = rref(a);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a(r, m.cols());
  return x;
}

std::vector<Scalar> mat_vec(const ScalarMatrix& m, const std::vector<Scalar>& v) {
  if (v.size() != m.cols()) throw_invalid("matrix.shape", "vector length mismatch");
  std::vector<Scalar> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

Scalar trace(const ScalarMatrix& m) {
  Scalar t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

ScalarMatrix diagonal(const std::vector<Scalar>& d) {
  ScalarMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool proportional(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::optional<Scalar> c;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].is_zero() != y[k].is_zero()) return false;
    if (x[k].is_zero()) continue;
    Scalar r = x[k] / y[k];
    if (!c) c = r;
    else if (!(*c == r)) return false;
  }
  return c.has_value();
}

}  // namespace qlc
