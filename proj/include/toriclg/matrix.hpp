#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toriclg/numeric.hpp"

namespace toriclg {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return {};
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) fail(ErrorKind::DimMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Builds a matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols) {
    return from_rows(cols).transposed();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<Int> column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, Int factor) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(dst, j) = checked_add((*this)(dst, j), checked_mul(factor, (*this)(src, j)));
  }
  void add_col(std::size_t dst, std::size_t src, Int factor) {
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, dst) = checked_add((*this)(i, dst), checked_mul(factor, (*this)(i, src)));
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::DimMismatch, "matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Int aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
      }
    return c;
  }

  std::vector<Int> apply(std::span<const Int> v) const {
    if (v.size() != cols_) fail(ErrorKind::DimMismatch, "matrix-vector shape mismatch");
    std::vector<Int> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out[i] = checked_add(out[i], checked_mul((*this)(i, j), v[j]));
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::DimMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// left * A * right = diag(d_1, ..., d_r, 0, ...), with d_1 | d_2 | ... and d_i > 0.
struct SmithDecomposition {
  IntMatrix left;
  std::vector<Int> diag;  // min(rows, cols) entries; trailing zeros allowed
  IntMatrix right;

  std::size_t rank() const {
    return static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](Int d) { return d != 0; }));
  }

  IntMatrix diagonal_matrix() const {
    IntMatrix d(left.rows(), right.cols());
    for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
    return d;
  }
};

inline SmithDecomposition smith_decomposition(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);
  const std::size_t k = std::min(m, n);

  auto abs64 = [](Int v) { return v < 0 ? -v : v; };

  for (std::size_t t = 0; t < k; ++t) {
    // pivot: smallest nonzero magnitude in the trailing block
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (!piv || abs64(d(i, j)) < abs64(d(piv->first, piv->second)))) piv = {i, j};
    if (!piv) break;
    d.swap_rows(t, piv->first);
    left.swap_rows(t, piv->first);
    d.swap_cols(t, piv->second);
    right.swap_cols(t, piv->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        left.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        right.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // move the smallest leftover in row/column t onto the pivot
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (d(i, t) != 0 && abs64(d(i, t)) < abs64(d(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(t, j) != 0 && abs64(d(t, j)) < abs64(d(bi, bj))) bi = t, bj = j;
        if (bi != t) {
          d.swap_rows(t, bi);
          left.swap_rows(t, bi);
        }
        if (bj != t) {
          d.swap_cols(t, bj);
          right.swap_cols(t, bj);
        }
        continue;
      }
      // divisibility of the trailing block
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < m && !bad; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (!bad) break;
      d.add_row(t, *bad, 1);
      left.add_row(t, *bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(left), std::vector<Int>(k, 0), std::move(right)};
  for (std::size_t i = 0; i < k; ++i) out.diag[i] = d(i, i);
  return out;
}

/// Saturated integer basis of {x in Z^n : A x = 0}, returned as vectors.
inline std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a) {
  auto snf = smith_decomposition(a);
  std::vector<std::vector<Int>> basis;
  const std::size_t r = snf.rank();
  for (std::size_t j = r; j < a.cols(); ++j) basis.push_back(snf.right.column(j));
  return basis;
}

inline std::size_t rank(const IntMatrix& a) {
  if (a.empty()) return 0;
  return smith_decomposition(a).rank();
}

/// Inverse of a unimodular matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::InvalidMatrix, "not square");
  auto det = determinant(a);
  if (det != 1 && det != -1) fail(ErrorKind::InvalidMatrix, "matrix is not unimodular (det " + det.str() + ")");
  // L A R = I  =>  A^{-1} = R L
  auto snf = smith_decomposition(a);
  return snf.right * snf.left;
}

/// Solves A x = b over the rationals; returns one solution or nullopt.
inline std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, std::span<const Int> b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) fail(ErrorKind::DimMismatch, "right-hand side length mismatch");
  std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && aug[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[row], aug[p]);
    Rational inv = 1 / aug[row][col];
    for (auto& v : aug[row]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rational f = aug[i][col];
      for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (aug[i][n] != 0) return std::nullopt;
  std::vector<Rational> x(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

/// Solves A x = b over the integers; returns one solution or nullopt.
inline std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, std::span<const Int> b) {
  if (b.size() != a.rows()) fail(ErrorKind::DimMismatch, "right-hand side length mismatch");
  // L A R = D  =>  D y = L b with x = R y
  auto snf = smith_decomposition(a);
  auto lb = snf.left.apply(b);
  std::vector<Int> y(a.cols(), 0);
  for (std::size_t i = 0; i < lb.size(); ++i) {
    Int d = i < snf.diag.size() ? snf.diag[i] : 0;
    if (d == 0) {
      if (lb[i] != 0) return std::nullopt;
      continue;
    }
    if (lb[i] % d != 0) return std::nullopt;
    y[i] = lb[i] / d;
  }
  return snf.right.apply(y);
}

}  // namespace toriclg
