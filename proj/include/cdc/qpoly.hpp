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

// Linearized (q-)polynomials a_0 x + a_1 x^q + ... + a_t x^{q^t} over F_{q^n}
// and the Gabidulin MRD codes they form.
//
// Codes are lazy: an index in [0, size) decodes to a polynomial by an
// odometer over coefficient encodings with a_0 the fastest digit, so any
// index range can be enumerated independently.

#include <cstdint>
#include <span>
#include <vector>

#include "cdc/errors.hpp"
#include "cdc/gf.hpp"
#include "cdc/linalg.hpp"

namespace cdc {

class QPolynomial {
 public:
  /// coeffs = (a_0, ..., a_t), each an encoding in field.
  QPolynomial(const ExtFieldSpec& field, std::vector<Elem> coeffs);

  const ExtFieldSpec& field() const { return *field_; }
  std::span<const Elem> coeffs() const { return coeffs_; }
  unsigned q_degree_bound() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  bool is_zero() const;

  Elem operator()(Elem x) const;
  /// n x n matrix over F_q with to_vector(f(x)) = to_vector(x) * M.
  Matrix to_matrix() const;
  std::size_t kernel_dim() const;

 private:
  const ExtFieldSpec* field_;
  std::vector<Elem> coeffs_;
};

/// Q_{q,n,t}: all q-polynomials of q-degree <= t over F_{q^n}; rank distance n - t.
class GabidulinCode {
 public:
  GabidulinCode(const ExtFieldSpec& field, unsigned t, std::uint64_t budget = kDefaultBudget);

  const ExtFieldSpec& field() const { return *field_; }
  const FieldSpec& base() const { return field_->base(); }
  unsigned n() const { return field_->degree(); }
  unsigned t() const { return t_; }
  unsigned rank_distance() const { return n() - t_; }
  std::uint64_t size() const { return size_; }

  QPolynomial polynomial(std::uint64_t index) const;
  Matrix matrix(std::uint64_t index) const;

  template <class Fn>
  void for_each_matrix(Fn&& fn) const {
    for (std::uint64_t i = 0; i < size_; ++i) fn(i, matrix(i));
  }

 private:
  const ExtFieldSpec* field_;
  unsigned t_;
  std::uint64_t size_;
  // Matrix of x -> a^l x^{q^i}, stored at i * n + l.
  std::vector<Matrix> generators_;
};

GabidulinCode enumerate_mrd(unsigned q, unsigned n, unsigned t, std::uint64_t budget = kDefaultBudget);

enum class ZeroMap { Exclude, Include };

/// Indices of the polynomials in `code` whose kernel has dimension >= j.
/// The zero map is excluded by default so the count is sum_{i=n-t}^{n-j} A_i.
std::vector<std::uint64_t> enumerate_filtration(const GabidulinCode& code, unsigned j,
                                                ZeroMap zero = ZeroMap::Exclude);

/// Coordinate embedding F_{q^k} -> F_{q^{k+h}}: (x_0..x_{k-1}) -> (x_0..x_{k-1}, 0..0).
Elem embed(const ExtFieldSpec& domain, const ExtFieldSpec& codomain, Elem x);

/// x -> sum a_i phi(x^{q^i}), an F_q-linear map F_{q^k} -> F_{q^{k+h}}.
/// The Frobenius power is taken in F_{q^k} before embedding.
class RectQPolynomial {
 public:
  RectQPolynomial(const ExtFieldSpec& domain, const ExtFieldSpec& codomain, std::vector<Elem> coeffs);

  const ExtFieldSpec& domain() const { return *domain_; }
  const ExtFieldSpec& codomain() const { return *codomain_; }
  std::span<const Elem> coeffs() const { return coeffs_; }

  Elem operator()(Elem x) const;
  /// k x (k+h) matrix over F_q.
  Matrix to_matrix() const;

 private:
  const ExtFieldSpec* domain_;
  const ExtFieldSpec* codomain_;
  std::vector<Elem> coeffs_;
};

/// Q_{q, k x (k+h), t}: q^{(k+h)(t+1)} matrices with rank distance k - t.
class RectGabidulinCode {
 public:
  RectGabidulinCode(const ExtFieldSpec& domain, const ExtFieldSpec& codomain, unsigned t,
                    std::uint64_t budget = kDefaultBudget);

  const FieldSpec& base() const { return domain_->base(); }
  unsigned k() const { return domain_->degree(); }
  unsigned h() const { return codomain_->degree() - domain_->degree(); }
  unsigned t() const { return t_; }
  std::uint64_t size() const { return size_; }

  RectQPolynomial polynomial(std::uint64_t index) const;
  Matrix matrix(std::uint64_t index) const;

 private:
  const ExtFieldSpec* domain_;
  const ExtFieldSpec* codomain_;
  unsigned t_;
  std::uint64_t size_;
  std::vector<Matrix> generators_;
};

RectGabidulinCode enumerate_rect_mrd(unsigned q, unsigned k, unsigned h, unsigned t,
                                     std::uint64_t budget = kDefaultBudget);

/// q^{exponent} if it does not exceed budget, else BudgetExceeded.
std::uint64_t checked_power(std::uint64_t q, std::uint64_t exponent, std::uint64_t budget, const char* what);

}  // namespace cdc
