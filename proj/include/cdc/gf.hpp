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

// Finite fields F_q (q = p^m) and extensions F_{q^n} over F_q.
//
// Elements are plain integer encodings. An element of F_q is the polynomial
// c_0 + c_1 x + ... + c_{m-1} x^{m-1} over F_p encoded as sum c_i p^i; an
// element of F_{q^n} is its coordinate vector over the power basis
// (1, a, ..., a^{n-1}) encoded as sum v_i q^i. Field objects are interned:
// make_field/make_extension return references that stay valid for the life of
// the program, so pointer identity means "same field".

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cdc/errors.hpp"

namespace cdc {

using Elem = std::uint32_t;

class FieldSpec {
 public:
  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  unsigned q() const { return q_; }
  std::uint64_t size() const { return q_; }
  /// Monic modulus over F_p, coefficients low to high (size m + 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  std::string name() const;

 private:
  friend const FieldSpec& make_field(unsigned p, unsigned m);
  FieldSpec(unsigned p, unsigned m);

  unsigned p_;
  unsigned m_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

/// F_{p^m} with the lexicographically smallest monic irreducible modulus.
/// Supports prime p and 1 <= m <= 4 with p^m <= 256.
const FieldSpec& make_field(unsigned p, unsigned m);

/// F_q for a prime power q.
const FieldSpec& make_field_of_order(unsigned q);

bool is_prime(unsigned n);

class ExtFieldSpec {
 public:
  const FieldSpec& base() const { return *base_; }
  unsigned degree() const { return n_; }
  std::uint64_t size() const { return size_; }
  /// Monic modulus over F_q, coefficients low to high (size n + 1).
  const std::vector<Elem>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Multiplication by a scalar of F_q.
  Elem scale(Elem c, Elem a) const;

  /// x^(q^i).
  Elem frobenius(Elem x, unsigned i) const;

  std::vector<Elem> to_vector(Elem x) const;
  Elem from_vector(std::span<const Elem> v) const;
  /// a^i, the i-th element of the power basis.
  Elem basis(unsigned i) const;

  std::string name() const;

 private:
  friend const ExtFieldSpec& make_extension(const FieldSpec& base, unsigned n);
  ExtFieldSpec(const FieldSpec& base, unsigned n);

  Elem slow_mul(Elem a, Elem b) const;
  Elem digit_add(Elem a, Elem b) const;

  const FieldSpec* base_;
  unsigned n_;
  std::uint64_t size_;
  std::vector<Elem> modulus_;
  std::vector<std::uint64_t> qpow_;
  bool tables_ = false;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> frob_;
  static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;
  std::vector<std::uint32_t> zech_;
};

/// Extension of degree n over base, q^n <= 2^20.
const ExtFieldSpec& make_extension(const FieldSpec& base, unsigned n);

/// Trial division by every monic polynomial of degree 1..deg/2 over `field`.
bool is_irreducible(std::span<const Elem> poly, const FieldSpec& field);

/// An element together with its owning field; arithmetic across different
/// fields throws ParameterError.
template <class Field>
class Element {
 public:
  Element(const Field& field, Elem value) : field_(&field), value_(value) {
    if (value >= field.size()) throw ParameterError("element encoding out of range");
  }

  const Field& field() const { return *field_; }
  Elem value() const { return value_; }

  friend Element operator+(const Element& a, const Element& b) {
    return {a.same(b), a.field_->add(a.value_, b.value_)};
  }
  friend Element operator-(const Element& a, const Element& b) {
    return {a.same(b), a.field_->sub(a.value_, b.value_)};
  }
  friend Element operator*(const Element& a, const Element& b) {
    return {a.same(b), a.field_->mul(a.value_, b.value_)};
  }
  friend Element operator/(const Element& a, const Element& b) {
    const Field& f = a.same(b);
    if (b.value_ == 0) throw ParameterError("division by zero");
    return {f, f.div(a.value_, b.value_)};
  }
  Element inverse() const {
    if (value_ == 0) throw ParameterError("division by zero");
    return {*field_, field_->inv(value_)};
  }
  friend bool operator==(const Element& a, const Element& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  const Field& same(const Element& other) const {
    if (field_ != other.field_) throw ParameterError("operands belong to different fields");
    return *field_;
  }

  const Field* field_;
  Elem value_;
};

using FieldElement = Element<FieldSpec>;
using ExtElement = Element<ExtFieldSpec>;

}  // namespace cdc
