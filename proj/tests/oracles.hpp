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

// Independent oracles shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <set>
#include <vector>

#include "cdc/gf.hpp"
#include "cdc/linalg.hpp"
#include "cdc/qpoly.hpp"

namespace cdc::testing {

/// Every (q, n) with q in {2,3,4,5,7,8,9} and q^n <= limit.
inline std::vector<std::pair<unsigned, unsigned>> extension_grid(std::uint64_t limit) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    std::uint64_t size = q;
    for (unsigned n = 1; size <= limit; ++n, size *= q) out.emplace_back(q, n);
  }
  return out;
}

/// All vectors of the row space of m, by enumerating coefficient tuples.
inline std::set<std::vector<Elem>> span_vectors(const Matrix& m) {
  const auto& f = m.field();
  std::set<std::vector<Elem>> out;
  std::vector<Elem> coeff(m.rows(), 0);
  while (true) {
    std::vector<Elem> v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v[c] = f.add(v[c], f.mul(coeff[r], m(r, c)));
    out.insert(std::move(v));
    std::size_t r = 0;
    while (r < coeff.size() && ++coeff[r] == f.q()) coeff[r++] = 0;
    if (r == coeff.size()) break;
  }
  return out;
}

/// dim(U meet V) from the size q^dim of the common vector set.
inline std::size_t intersection_dim_by_enumeration(const Subspace& u, const Subspace& v) {
  const auto su = span_vectors(u.basis());
  const auto sv = span_vectors(v.basis());
  std::size_t common = 0;
  for (const auto& x : su) common += sv.count(x);
  std::size_t dim = 0;
  for (std::size_t s = 1; s < common; s *= u.field().q()) ++dim;
  return dim;
}

/// Exhaustive field-axiom check for F_{q^n}, q^n <= 2^12.
///
/// Every triple is checked when the field has at most 64 elements. For the
/// rest the check stays exhaustive through reductions:
///  - addition is compared with coordinate-wise addition over F_q on every
///    pair, and F_q itself is checked on every triple;
///  - x -> a x is additive for every a: the encoding is a base-p numeral, and
///    a (b) = a (b - p^i) + a (p^i) for the lowest nonzero digit i of every b
///    pins the map to its values on the additive generators p^i;
///  - associativity (ab)c = a(bc) for every pair with c a primitive element
///    extends to every power of c.
inline bool field_axioms_hold(const ExtFieldSpec& f) {
  const auto& base = f.base();
  const unsigned q = base.q();
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      for (Elem c = 0; c < q; ++c) {
        if (base.add(base.add(a, b), c) != base.add(a, base.add(b, c))) return false;
        if (base.mul(base.mul(a, b), c) != base.mul(a, base.mul(b, c))) return false;
        if (base.mul(a, base.add(b, c)) != base.add(base.mul(a, b), base.mul(a, c))) return false;
        if (base.add(a, b) != base.add(b, a) || base.mul(a, b) != base.mul(b, a)) return false;
      }
  for (Elem a = 0; a < q; ++a) {
    if (base.add(a, 0) != a || base.mul(a, 1) != a || base.add(a, base.neg(a)) != 0) return false;
    if (a && base.mul(a, base.inv(a)) != 1) return false;
  }

  const Elem size = static_cast<Elem>(f.size());
  const unsigned p = base.p();
  Elem primitive = 0;
  for (Elem g = 2; g < size && !primitive; ++g) {
    Elem x = g;
    std::uint64_t order = 1;
    while (x != 1) x = f.mul(x, g), ++order;
    if (order == size - 1) primitive = g;
  }
  if (size > 2 && !primitive) return false;

  std::vector<Elem> lowest(size, 0);  // p^i for the lowest nonzero base-p digit
  for (Elem b = 1; b < size; ++b) {
    Elem unit = 1;
    while ((b / unit) % p == 0) unit *= p;
    lowest[b] = unit;
  }
  for (Elem a = 0; a < size; ++a) {
    if (f.add(a, 0) != a || f.mul(a, 1) != a || f.mul(a, 0) != 0) return false;
    if (f.add(a, f.neg(a)) != 0) return false;
    if (a && f.mul(a, f.inv(a)) != 1) return false;
    for (Elem b = 0; b < size; ++b) {
      Elem sum = 0, place = 1;
      for (Elem x = a, y = b; x || y; x /= q, y /= q, place *= q) sum += base.add(x % q, y % q) * place;
      if (f.add(a, b) != sum) return false;
      if (f.mul(a, b) != f.mul(b, a)) return false;
      if (b && f.mul(a, b) != f.add(f.mul(a, b - lowest[b]), f.mul(a, lowest[b]))) return false;
      if (primitive && f.mul(f.mul(a, b), primitive) != f.mul(a, f.mul(b, primitive))) return false;
    }
  }
  if (size <= 64) {
    for (Elem a = 0; a < size; ++a)
      for (Elem b = 0; b < size; ++b)
        for (Elem c = 0; c < size; ++c) {
          if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return false;
          if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return false;
        }
  }
  return true;
}

/// Frobenius x -> x^q: equals pow(x, q), is additive on every pair and
/// F_q-homogeneous, bijective, and its n-th iterate is the identity.
inline bool frobenius_properties_hold(const ExtFieldSpec& f) {
  const Elem size = static_cast<Elem>(f.size());
  const unsigned q = f.base().q();
  std::vector<bool> seen(size, false);
  for (Elem x = 0; x < size; ++x) {
    const Elem y = f.frobenius(x, 1);
    if (y != f.pow(x, q) || seen[y]) return false;
    seen[y] = true;
    if (f.frobenius(x, f.degree()) != x || f.frobenius(x, 0) != x) return false;
    Elem it = x;
    for (unsigned i = 0; i < f.degree(); ++i) it = f.frobenius(it, 1);
    if (it != x) return false;
    for (Elem c = 0; c < q; ++c)
      if (f.frobenius(f.scale(c, x), 1) != f.scale(c, y)) return false;
  }
  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y < size; ++y)
      if (f.frobenius(f.add(x, y), 1) != f.add(f.frobenius(x, 1), f.frobenius(y, 1))) return false;
  return true;
}

inline std::vector<Matrix> all_matrices(const GabidulinCode& code) {
  std::vector<Matrix> out;
  out.reserve(code.size());
  for (std::uint64_t i = 0; i < code.size(); ++i) out.push_back(code.matrix(i));
  return out;
}

}  // namespace cdc::testing
