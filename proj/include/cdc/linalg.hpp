// Copyright 2026 The cdc Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense matrices over F_q and subspaces in canonical (RREF) form.
// Row convention throughout: a subspace is the row space of its basis.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "cdc/gf.hpp"

namespace cdc {

class Matrix {
 public:
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
  Matrix(const FieldSpec& field, std::initializer_list<std::initializer_list<Elem>> rows);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field, const std::vector<std::vector<Elem>>& rows, std::size_t cols);

  const FieldSpec& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& entries() const { return data_; }

  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix& operator+=(const Matrix& other);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  /// Orders by shape, then entries row-major. Both operands must share a field.
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

  /// Copy of rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  /// Copy of columns [first, first + count).
  Matrix col_block(std::size_t first, std::size_t count) const;

 private:
  void check_same_shape(const Matrix& other) const;

  const FieldSpec* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Horizontal concatenation (A_1 | A_2 | ...). All blocks need equal row counts.
Matrix hstack(std::span<const Matrix> blocks);
Matrix hstack(std::initializer_list<Matrix> blocks);
/// Vertical concatenation.
Matrix vstack(const Matrix& top, const Matrix& bottom);

Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Plain Gaussian elimination with field tables, never bit-packed.
std::size_t rank_generic(const Matrix& m);
/// Dimension of the left kernel {x : xM = 0}.
std::size_t kernel_dim(const Matrix& m);

namespace gf2 {

/// Rows of a matrix over F_2 with at most 64 columns, column c at bit c.
std::vector<std::uint64_t> pack(const Matrix& m);
/// Rank of packed rows; the input is consumed.
std::size_t rank(std::span<std::uint64_t> rows);

}  // namespace gf2

class Subspace {
 public:
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  /// dim x ambient_dim matrix in reduced row-echelon form.
  const Matrix& basis() const { return basis_; }
  const FieldSpec& field() const { return basis_.field(); }
  /// Bit-packed basis rows when q = 2 and ambient_dim <= 64, else empty.
  std::span<const std::uint64_t> packed() const { return packed_; }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  friend Subspace subspace_from_rows(const Matrix& m);
  explicit Subspace(Matrix basis);

  Matrix basis_;
  std::vector<std::uint64_t> packed_;
};

/// Row space of m in canonical form. Rank-deficient input is accepted and
/// yields a subspace of the true (smaller) dimension.
Subspace subspace_from_rows(const Matrix& m);

std::size_t intersection_dim(const Subspace& u, const Subspace& v);
std::size_t intersection_dim_generic(const Subspace& u, const Subspace& v);
/// dim U + dim V - 2 dim(U meet V).
std::size_t subspace_distance(const Subspace& u, const Subspace& v);

}  // namespace cdc

template <>
struct std::hash<cdc::Subspace> {
  std::size_t operator()(const cdc::Subspace& s) const noexcept;
};
