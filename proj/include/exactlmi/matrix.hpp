#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "multipoly.hpp"

namespace exactlmi {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<MultiPolyQ>;
using RationalVector = std::vector<Rational>;

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product size mismatch");
  RationalMatrix c(a.rows(), b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

inline RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector size mismatch");
  RationalVector r(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (v[j] != 0) r[i] += a(i, j) * v[j];
  return r;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t col_limit = SIZE_MAX) {
  std::vector<std::size_t> pivots;
  const std::size_t cols = std::min(col_limit, m.cols());
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = Rational(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

inline Rational determinant(RationalMatrix m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = Rational(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  if (row_reduce(aug, n).size() != n) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// One solution of A v = b (free variables set to zero), or nullopt if inconsistent.
inline std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + 1, Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = row_reduce(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  RationalVector x(n, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
  return x;
}

/// Exact determinant of a square polynomial matrix by Laplace expansion along
/// rows, memoising the minors on each (row, column-subset) pair.
inline MultiPolyQ det_poly_matrix(const PolyMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  if (n > 20) throw std::invalid_argument("polynomial determinant limited to size 20");
  const MonomialOrder order = m(0, 0).order();
  // minors[S] = det of rows (n-|S|..n-1) with columns S, built bottom-up.
  std::map<std::uint32_t, MultiPolyQ> level;
  for (std::size_t j = 0; j < n; ++j) level[1u << j] = m(n - 1, j);
  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t row = n - k;
    std::map<std::uint32_t, MultiPolyQ> next;
    for (const auto& [mask, _] : level) {
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (1u << j)) continue;
        const std::uint32_t bigger = mask | (1u << j);
        if (next.count(bigger)) continue;
        MultiPolyQ acc(order);
        int s = 1;
        for (std::size_t c = 0; c < n; ++c) {
          if (!(bigger & (1u << c))) continue;
          const auto& entry = m(row, c);
          if (!entry.is_zero()) {
            const auto& minor = level.at(bigger & ~(1u << c));
            if (!minor.is_zero()) {
              if (s > 0) acc += entry * minor;
              else acc -= entry * minor;
            }
          }
          s = -s;
        }
        next.emplace(bigger, std::move(acc));
      }
    }
    level = std::move(next);
  }
  return level.begin()->second;
}

}  // namespace exactlmi
