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

#include "cdc/linalg.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace cdc {

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(&field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw ParameterError("matrix entry count does not match its shape");
  for (Elem e : data_)
    if (e >= field.q()) throw ParameterError("matrix entry outside " + field.name());
}

Matrix::Matrix(const FieldSpec& field, std::initializer_list<std::initializer_list<Elem>> rows)
    : field_(&field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ParameterError("ragged matrix rows");
    for (Elem e : r) {
      if (e >= field.q()) throw ParameterError("matrix entry outside " + field.name());
      data_.push_back(e);
    }
  }
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  std::vector<Elem> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw ParameterError("row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(cols));
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(field, rows.size(), cols, std::move(entries));
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

void Matrix::check_same_shape(const Matrix& other) const {
  if (field_ != other.field_) throw ParameterError("matrices over different fields");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ParameterError("matrix shape mismatch");
}

Matrix& Matrix::operator+=(const Matrix& other) {
  check_same_shape(other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_->add(data_[i], other.data_[i]);
  return *this;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  r += b;
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  a.check_same_shape(b);
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_->sub(a.data_[i], b.data_[i]);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw ParameterError("matrices over different fields");
  if (a.cols_ != b.rows_) throw ParameterError("matrix product shape mismatch");
  const FieldSpec& f = *a.field_;
  Matrix r(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Elem x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = f.add(r(i, j), f.mul(x, b(l, j)));
    }
  return r;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw ParameterError("row block out of range");
  return Matrix(*field_, count, cols_,
                std::vector<Elem>(data_.begin() + first * cols_, data_.begin() + (first + count) * cols_));
}

Matrix Matrix::col_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw ParameterError("column block out of range");
  Matrix r(*field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
  return r;
}

Matrix hstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw ParameterError("hstack of no blocks");
  const FieldSpec& f = blocks.front().field();
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (&b.field() != &f) throw ParameterError("matrices over different fields");
    if (b.rows() != rows) throw ParameterError("hstack blocks need equal row counts");
    cols += b.cols();
  }
  Matrix r(f, rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, offset + j) = b(i, j);
    offset += b.cols();
  }
  return r;
}

Matrix hstack(std::initializer_list<Matrix> blocks) { return hstack(std::span<const Matrix>(blocks.begin(), blocks.size())); }

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (&top.field() != &bottom.field()) throw ParameterError("matrices over different fields");
  if (top.cols() != bottom.cols()) throw ParameterError("vstack blocks need equal column counts");
  std::vector<Elem> entries = top.entries();
  entries.insert(entries.end(), bottom.entries().begin(), bottom.entries().end());
  return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

namespace {

// In-place Gauss-Jordan; returns the rank. Pivots are scaled to 1 and cleared
// above and below, nonzero rows end up on top.
std::size_t eliminate(Matrix& m) {
  const FieldSpec& f = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Elem s = f.inv(m(r, c));
    if (s != 1)
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(s, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Elem x = m(i, c);
      if (x == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(x, m(r, j)));
    }
    ++r;
  }
  return r;
}

}  // namespace

Matrix rref(const Matrix& m) {
  Matrix r = m;
  eliminate(r);
  return r;
}

std::size_t rank_generic(const Matrix& m) {
  Matrix r = m;
  return eliminate(r);
}

std::size_t rank(const Matrix& m) {
  if (m.field().q() == 2 && m.cols() <= 64) {
    auto rows = gf2::pack(m);
    return gf2::rank(rows);
  }
  return rank_generic(m);
}

std::size_t kernel_dim(const Matrix& m) { return m.rows() - rank(m); }

namespace gf2 {

std::vector<std::uint64_t> pack(const Matrix& m) {
  if (m.field().q() != 2 || m.cols() > 64) throw ParameterError("gf2::pack needs a matrix over GF(2) with <= 64 columns");
  std::vector<std::uint64_t> rows(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) rows[i] |= std::uint64_t{1} << j;
  return rows;
}

std::size_t rank(std::span<std::uint64_t> rows) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // Pick any nonzero remaining row as pivot and clear its lowest bit elsewhere.
    std::size_t piv = i;
    while (piv < rows.size() && rows[piv] == 0) ++piv;
    if (piv == rows.size()) break;
    std::swap(rows[i], rows[piv]);
    const std::uint64_t bit = rows[i] & (~rows[i] + 1);
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j] & bit) rows[j] ^= rows[i];
    ++r;
  }
  return r;
}

}  // namespace gf2

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
  if (basis_.field().q() == 2 && basis_.cols() <= 64) packed_ = gf2::pack(basis_);
}

Subspace subspace_from_rows(const Matrix& m) {
  Matrix r = m;
  const std::size_t k = eliminate(r);
  return Subspace(r.row_block(0, k));
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
  return a.basis_ <=> b.basis_;
}

std::size_t intersection_dim_generic(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw ParameterError("subspaces live in different ambient spaces");
  return u.dim() + v.dim() - rank_generic(vstack(u.basis(), v.basis()));
}

std::size_t intersection_dim(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw ParameterError("subspaces live in different ambient spaces");
  if (&u.field() != &v.field()) throw ParameterError("subspaces over different fields");
  const auto pu = u.packed();
  const auto pv = v.packed();
  if ((!pu.empty() || u.dim() == 0) && (!pv.empty() || v.dim() == 0) && u.field().q() == 2) {
    std::uint64_t buf[128];
    const std::size_t total = pu.size() + pv.size();
    if (total <= 128) {
      std::copy(pu.begin(), pu.end(), buf);
      std::copy(pv.begin(), pv.end(), buf + pu.size());
      return u.dim() + v.dim() - gf2::rank(std::span<std::uint64_t>(buf, total));
    }
  }
  return intersection_dim_generic(u, v);
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  return u.dim() + v.dim() - 2 * intersection_dim(u, v);
}

}  // namespace cdc

std::size_t std::hash<cdc::Subspace>::operator()(const cdc::Subspace& s) const noexcept {
  std::size_t h = s.ambient_dim() * 0x9E3779B97F4A7C15ull + s.dim();
  for (cdc::Elem e : s.basis().entries()) h = (h ^ e) * 0x100000001B3ull;
  return h;
}
