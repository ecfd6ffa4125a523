// Copyright 2026 The quadprod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUADPROD_MATRIX_HPP
#define QUADPROD_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadprod/error.hpp"
#include "quadprod/field.hpp"

namespace quadprod {

/// Dense row-major matrix over an exact field. Zero-sized shapes are legal.
template <FieldElement K>
class Matrix {
 public:
  using value_type = K;

  Matrix() : Matrix(0, 0, default_field()) {}

  Matrix(std::size_t rows, std::size_t cols, const Field& field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, K::zero(field)) {}

  static Matrix identity(std::size_t n, const Field& field) {
    Matrix m(n, n, field);
    const K one = K::one(field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  static Matrix zero(std::size_t rows, std::size_t cols, const Field& field) { return Matrix(rows, cols, field); }

  /// Convenience for literals: integer entries mapped into the field.
  static Matrix from_rows(const Field& field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c, field);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw Error(Errc::ShapeMismatch, "ragged row list");
      std::size_t j = 0;
      for (std::int64_t v : row) m(i, j++) = K::from_integer(v, field);
      ++i;
    }
    return m;
  }

  static Matrix diagonal(const Field& field, std::span<const K> entries) {
    Matrix m(entries.size(), entries.size(), field);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::span<const K> data() const noexcept { return data_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1, field_);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) throw Error(Errc::ShapeMismatch, "block out of range");
    Matrix b(nrows, ncols, field_);
    for (std::size_t i = 0; i < nrows; ++i)
      for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
    return b;
  }

  void set_block(std::size_t row0, std::size_t col0, const Matrix& b) {
    if (row0 + b.rows_ > rows_ || col0 + b.cols_ > cols_) throw Error(Errc::ShapeMismatch, "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(row0 + i, col0 + j) = b(i, j);
  }

  bool is_zero() const {
    for (const K& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  static Field default_field() {
    if constexpr (std::is_same_v<K, Residue>) {
      return Field::prime(2);
    } else {
      return Field::rationals();
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<K> data_;
};

namespace detail {

template <FieldElement K>
void require_same_field(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.field() != b.field()) {
    throw Error(Errc::FieldMismatch, a.field().to_string() + " vs " + b.field().to_string());
  }
}

template <FieldElement K>
void require_square(const Matrix<K>& m, const char* what) {
  if (!m.is_square()) {
    throw Error(Errc::NotSquare, std::string(what) + ": " + std::to_string(m.rows()) + "x" +
                                     std::to_string(m.cols()) + " is not square");
  }
}

}  // namespace detail

template <FieldElement K>
Matrix<K> operator+(const Matrix<K>& a, const Matrix<K>& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "sum of unequal shapes");
  Matrix<K> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

template <FieldElement K>
Matrix<K> operator-(const Matrix<K>& a, const Matrix<K>& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "difference of unequal shapes");
  Matrix<K> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

template <FieldElement K>
Matrix<K> operator*(const K& s, const Matrix<K>& a) {
  Matrix<K> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

template <FieldElement K>
Matrix<K> multiply(const Matrix<K>& a, const Matrix<K>& b) {
  detail::require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw Error(Errc::ShapeMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                         " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<K> c(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const K& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(l, j).is_zero()) c(i, j) += x * b(l, j);
      }
    }
  }
  return c;
}

template <FieldElement K>
Matrix<K> operator*(const Matrix<K>& a, const Matrix<K>& b) {
  return multiply(a, b);
}

template <FieldElement K>
Matrix<K> transpose(const Matrix<K>& a) {
  Matrix<K> t(a.cols(), a.rows(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <FieldElement K>
Matrix<K> power(const Matrix<K>& a, std::size_t e) {
  detail::require_square(a, "power");
  Matrix<K> result = Matrix<K>::identity(a.rows(), a.field());
  Matrix<K> base = a;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Direct sum. An empty list gives the 0x0 matrix over `field`.
template <FieldElement K>
Matrix<K> block_diag(std::span<const Matrix<K>> parts, const Field& field) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    if (p.field() != field) throw Error(Errc::FieldMismatch, "block_diag part over " + p.field().to_string());
    rows += p.rows();
    cols += p.cols();
  }
  Matrix<K> out(rows, cols, field);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    out.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return out;
}

template <FieldElement K>
Matrix<K> block_diag(std::initializer_list<Matrix<K>> parts, const Field& field) {
  return block_diag(std::span<const Matrix<K>>(parts.begin(), parts.size()), field);
}

/// Horizontal concatenation; row counts must agree.
template <FieldElement K>
Matrix<K> hconcat(const Matrix<K>& a, const Matrix<K>& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows()) throw Error(Errc::ShapeMismatch, "hconcat of unequal row counts");
  Matrix<K> out(a.rows(), a.cols() + b.cols(), a.field());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

template <FieldElement K>
struct RrefResult {
  Matrix<K> reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row.
template <FieldElement K>
RrefResult<K> rref(Matrix<K> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t j = col; j < cols; ++j) std::swap(m(pivot, j), m(row, j));
    }
    const K inv = m(row, col).inverse();
    for (std::size_t j = col; j < cols; ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const K factor = m(i, col);
      for (std::size_t j = col; j < cols; ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  RrefResult<K> out{std::move(m), std::move(pivots), 0};
  out.rank = out.pivot_cols.size();
  return out;
}

template <FieldElement K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank;
}

template <FieldElement K>
std::size_t nullity(const Matrix<K>& m) {
  return m.cols() - rank(m);
}

template <FieldElement K>
Matrix<K> inverse(const Matrix<K>& s) {
  detail::require_square(s, "inverse");
  const std::size_t n = s.rows();
  auto r = rref(hconcat(s, Matrix<K>::identity(n, s.field())));
  if (r.rank < n || (n > 0 && r.pivot_cols[n - 1] != n - 1)) {
    throw Error(Errc::SingularMatrix, "matrix is not invertible");
  }
  return r.reduced.block(0, n, n, n);
}

template <FieldElement K>
bool is_invertible(const Matrix<K>& s) {
  return s.is_square() && rank(s) == s.rows();
}

/// S * M * S^-1.
template <FieldElement K>
Matrix<K> conjugate(const Matrix<K>& s, const Matrix<K>& m) {
  return s * m * inverse(s);
}

template <FieldElement K>
bool is_idempotent(const Matrix<K>& m) {
  return m.is_square() && m * m == m;
}

template <FieldElement K>
bool is_square_zero(const Matrix<K>& m) {
  return m.is_square() && (m * m).is_zero();
}

template <FieldElement K>
bool is_nilpotent(const Matrix<K>& m) {
  return m.is_square() && power(m, m.rows()).is_zero();
}

}  // namespace quadprod

#endif  // QUADPROD_MATRIX_HPP
