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

#include "cdc/qpoly.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace cdc {

std::uint64_t checked_power(std::uint64_t q, std::uint64_t exponent, std::uint64_t budget, const char* what) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (v > budget / q) {
      throw BudgetExceeded(std::string(what) + ": " + std::to_string(q) + "^" + std::to_string(exponent) +
                           " exceeds the enumeration budget " + std::to_string(budget));
    }
    v *= q;
  }
  if (v > budget) throw BudgetExceeded(std::string(what) + " exceeds the enumeration budget");
  return v;
}

namespace {

// Sum over coefficient coordinates of the precomputed generator matrices.
Matrix combine(const std::vector<Matrix>& generators, const FieldSpec& base, unsigned ext_degree,
               std::span<const Elem> coeffs, std::size_t rows, std::size_t cols) {
  Matrix m(base, rows, cols);
  const unsigned q = base.q();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Elem a = coeffs[i];
    for (unsigned l = 0; l < ext_degree && a != 0; ++l, a /= q) {
      const Elem c = a % q;
      if (c == 0) continue;
      const Matrix& g = generators[i * ext_degree + l];
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t s = 0; s < cols; ++s) {
          const Elem x = g(r, s);
          if (x) m(r, s) = base.add(m(r, s), base.mul(c, x));
        }
    }
  }
  return m;
}

std::vector<Elem> decode_coeffs(std::uint64_t index, std::uint64_t field_size, unsigned count) {
  std::vector<Elem> coeffs(count);
  for (unsigned i = 0; i < count; ++i) {
    coeffs[i] = static_cast<Elem>(index % field_size);
    index /= field_size;
  }
  return coeffs;
}

}  // namespace

QPolynomial::QPolynomial(const ExtFieldSpec& field, std::vector<Elem> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ParameterError("a q-polynomial needs at least a_0");
  if (coeffs_.size() > field.degree()) throw ParameterError("q-degree must be below the extension degree");
  for (Elem a : coeffs_)
    if (a >= field.size()) throw ParameterError("coefficient outside " + field.name());
}

bool QPolynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem a) { return a == 0; });
}

Elem QPolynomial::operator()(Elem x) const {
  Elem acc = 0;
  Elem xp = x;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i]) acc = field_->add(acc, field_->mul(coeffs_[i], xp));
    xp = field_->frobenius(xp, 1);
  }
  return acc;
}

Matrix QPolynomial::to_matrix() const {
  const unsigned n = field_->degree();
  Matrix m(field_->base(), n, n);
  for (unsigned r = 0; r < n; ++r) {
    const auto v = field_->to_vector((*this)(field_->basis(r)));
    for (unsigned c = 0; c < n; ++c) m(r, c) = v[c];
  }
  return m;
}

std::size_t QPolynomial::kernel_dim() const { return cdc::kernel_dim(to_matrix()); }

GabidulinCode::GabidulinCode(const ExtFieldSpec& field, unsigned t, std::uint64_t budget) : field_(&field), t_(t) {
  const unsigned n = field.degree();
  if (t >= n) throw ParameterError("Gabidulin code needs 0 <= t < n");
  size_ = checked_power(field.base().q(), std::uint64_t{n} * (t + 1), budget, "MRD enumeration");
  for (unsigned i = 0; i <= t; ++i)
    for (unsigned l = 0; l < n; ++l) {
      std::vector<Elem> coeffs(t + 1, 0);
      coeffs[i] = field.basis(l);
      generators_.push_back(QPolynomial(field, std::move(coeffs)).to_matrix());
    }
}

QPolynomial GabidulinCode::polynomial(std::uint64_t index) const {
  if (index >= size_) throw ParameterError("codeword index out of range");
  return QPolynomial(*field_, decode_coeffs(index, field_->size(), t_ + 1));
}

Matrix GabidulinCode::matrix(std::uint64_t index) const {
  if (index >= size_) throw ParameterError("codeword index out of range");
  const auto coeffs = decode_coeffs(index, field_->size(), t_ + 1);
  return combine(generators_, base(), n(), coeffs, n(), n());
}

GabidulinCode enumerate_mrd(unsigned q, unsigned n, unsigned t, std::uint64_t budget) {
  return GabidulinCode(make_extension(make_field_of_order(q), n), t, budget);
}

std::vector<std::uint64_t> enumerate_filtration(const GabidulinCode& code, unsigned j, ZeroMap zero) {
  if (j > code.t()) throw ParameterError("filtration level j must satisfy 0 <= j <= t");
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < code.size(); ++i) {
    const Matrix m = code.matrix(i);
    if (m.is_zero()) {
      if (zero == ZeroMap::Include) out.push_back(i);
      continue;
    }
    if (kernel_dim(m) >= j) out.push_back(i);
  }
  return out;
}

Elem embed(const ExtFieldSpec& domain, const ExtFieldSpec& codomain, Elem x) {
  if (&domain.base() != &codomain.base() || domain.degree() > codomain.degree())
    throw ParameterError("embedding needs a common base field and k <= k + h");
  // Base-q digits are the coordinates, so padding with zeros keeps the encoding.
  if (x >= domain.size()) throw ParameterError("element outside " + domain.name());
  return x;
}

RectQPolynomial::RectQPolynomial(const ExtFieldSpec& domain, const ExtFieldSpec& codomain, std::vector<Elem> coeffs)
    : domain_(&domain), codomain_(&codomain), coeffs_(std::move(coeffs)) {
  if (&domain.base() != &codomain.base() || domain.degree() > codomain.degree())
    throw ParameterError("rectangular q-polynomial needs F_{q^k} inside the coordinates of F_{q^{k+h}}");
  if (coeffs_.empty() || coeffs_.size() > domain.degree()) throw ParameterError("need 0 <= t < k");
  for (Elem a : coeffs_)
    if (a >= codomain.size()) throw ParameterError("coefficient outside " + codomain.name());
}

Elem RectQPolynomial::operator()(Elem x) const {
  Elem acc = 0;
  Elem xp = x;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i]) acc = codomain_->add(acc, codomain_->mul(coeffs_[i], embed(*domain_, *codomain_, xp)));
    xp = domain_->frobenius(xp, 1);
  }
  return acc;
}

Matrix RectQPolynomial::to_matrix() const {
  const unsigned k = domain_->degree();
  const unsigned cols = codomain_->degree();
  Matrix m(domain_->base(), k, cols);
  for (unsigned r = 0; r < k; ++r) {
    const auto v = codomain_->to_vector((*this)(domain_->basis(r)));
    for (unsigned c = 0; c < cols; ++c) m(r, c) = v[c];
  }
  return m;
}

RectGabidulinCode::RectGabidulinCode(const ExtFieldSpec& domain, const ExtFieldSpec& codomain, unsigned t,
                                     std::uint64_t budget)
    : domain_(&domain), codomain_(&codomain), t_(t) {
  if (t >= domain.degree()) throw ParameterError("rectangular MRD code needs t < k");
  size_ = checked_power(domain.base().q(), std::uint64_t{codomain.degree()} * (t + 1), budget,
                        "rectangular MRD enumeration");
  for (unsigned i = 0; i <= t; ++i)
    for (unsigned l = 0; l < codomain.degree(); ++l) {
      std::vector<Elem> coeffs(t + 1, 0);
      coeffs[i] = codomain.basis(l);
      generators_.push_back(RectQPolynomial(domain, codomain, std::move(coeffs)).to_matrix());
    }
}

RectQPolynomial RectGabidulinCode::polynomial(std::uint64_t index) const {
  if (index >= size_) throw ParameterError("codeword index out of range");
  return RectQPolynomial(*domain_, *codomain_, decode_coeffs(index, codomain_->size(), t_ + 1));
}

Matrix RectGabidulinCode::matrix(std::uint64_t index) const {
  if (index >= size_) throw ParameterError("codeword index out of range");
  const auto coeffs = decode_coeffs(index, codomain_->size(), t_ + 1);
  return combine(generators_, base(), codomain_->degree(), coeffs, k(), codomain_->degree());
}

RectGabidulinCode enumerate_rect_mrd(unsigned q, unsigned k, unsigned h, unsigned t, std::uint64_t budget) {
  const FieldSpec& base = make_field_of_order(q);
  return RectGabidulinCode(make_extension(base, k), make_extension(base, k + h), t, budget);
}

}  // namespace cdc
