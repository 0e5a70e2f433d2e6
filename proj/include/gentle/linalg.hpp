#pragma once

// Dense exact linear algebra over the rationals. Matrices here are small and
// mostly zero, so elimination skips zero entries aggressively.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentle/rational.hpp"

namespace gentle {

using Vector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // Rows given as nested lists; all rows must have the same length.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix column(const Vector& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!gentle::is_zero(x)) return false;
    return true;
  }

  Vector col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& x = a(i, k);
        if (gentle::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& y = b(k, j);
          if (!gentle::is_zero(y)) p(i, j) += x * y;
        }
      }
    return p;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!gentle::is_zero(a(i, k)) && !gentle::is_zero(v[k])) out[i] += a(i, k) * v[k];
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const Rational& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

inline Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

inline Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& which) {
  Matrix out(m.rows(), which.size());
  for (std::size_t k = 0; k < which.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, which[k]);
  return out;
}

inline Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& which) {
  Matrix out(which.size(), m.cols());
  for (std::size_t k = 0; k < which.size(); ++k)
    for (std::size_t c = 0; c < m.cols(); ++c) out(k, c) = m(which[k], c);
  return out;
}

struct Echelon {
  Matrix form;                          // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // one per nonzero row, increasing
};

// Gauss-Jordan elimination. Only the first `limit_cols` columns are used as
// pivot candidates (all columns by default); the rest are carried along.
inline Echelon row_reduce(Matrix m, std::size_t limit_cols = static_cast<std::size_t>(-1)) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t pivot_limit = std::min(cols, limit_cols);
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (is_zero(m(r, j))) continue;
      m(r, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Rational f = m(i, c);
      for (std::size_t j : support) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  if (m.rows() < m.cols()) return row_reduce(m.transpose()).pivot_cols.size();
  return row_reduce(m).pivot_cols.size();
}

// Basis of { x : m x = 0 }.
inline std::vector<Vector> nullspace(const Matrix& m) {
  const std::size_t n = m.cols();
  std::vector<Vector> basis;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector v(n);
      v[j] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivot_cols) is_pivot[p] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.form(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Matrix nullspace_matrix(const Matrix& m) { return from_columns(nullspace(m), m.cols()); }

// Indices of a maximal independent set of columns (greedy, left to right).
inline std::vector<std::size_t> independent_columns(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  return row_reduce(m).pivot_cols;
}

inline Matrix column_basis(const Matrix& m) { return select_columns(m, independent_columns(m)); }

// Columns of `candidates` that extend span(base) to span(base + candidates).
inline Matrix complement_columns(const Matrix& base, const Matrix& candidates) {
  const Matrix joined = hcat(base, candidates);
  std::vector<std::size_t> chosen;
  for (auto p : independent_columns(joined))
    if (p >= base.cols()) chosen.push_back(p - base.cols());
  // Pivots of the joined matrix past the base block are exactly the extension.
  return select_columns(candidates, chosen);
}

// Solves a x = b for x (one column per column of b). Returns nullopt if
// inconsistent. Free variables are set to zero.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  Matrix x(n, b.cols());
  if (a.rows() == 0) return x;
  const Echelon e = row_reduce(hcat(a, b), n);
  const std::size_t r = e.pivot_cols.size();
  for (std::size_t i = r; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!is_zero(e.form(i, n + j))) return std::nullopt;
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivot_cols[k], j) = e.form(k, n + j);
  return x;
}

inline Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = 1 / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!is_zero(m(c, j))) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

inline bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && (m.rows() == 0 || rank(m) == m.rows());
}

}  // namespace gentle
