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

#include "cdc/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace cdc {

namespace {

using Poly = std::vector<Elem>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over `f`; b must be nonzero.
Poly poly_rem(Poly a, const Poly& b, const FieldSpec& f) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const Elem lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const Elem c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return a;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-q
// digits of idx with c_0 as the most significant digit, so increasing idx
// walks the tuples (c_0, ..., c_{deg-1}) in lexicographic order.
Poly lex_monic(std::uint64_t idx, unsigned deg, unsigned q) {
  Poly poly(deg + 1, 0);
  poly[deg] = 1;
  for (unsigned i = deg; i-- > 0;) {
    poly[i] = static_cast<Elem>(idx % q);
    idx /= q;
  }
  return poly;
}

Poly smallest_irreducible(const FieldSpec& f, unsigned deg) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < deg; ++i) count *= f.q();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly cand = lex_monic(idx, deg, f.q());
    if (is_irreducible(cand, f)) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::recursive_mutex& registry_mutex() {
  static std::recursive_mutex mu;
  return mu;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::span<const Elem> poly, const FieldSpec& field) {
  Poly a(poly.begin(), poly.end());
  trim(a);
  if (a.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(a.size() - 1);
  if (deg == 1) return true;
  for (unsigned e = 1; e <= deg / 2; ++e) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= field.q();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_rem(a, lex_monic(idx, e, field.q()), field).empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// F_q

FieldSpec::FieldSpec(unsigned p, unsigned m) : p_(p), m_(m), q_(1) {
  for (unsigned i = 0; i < m; ++i) q_ *= p;

  // Digits of an encoding, base p.
  auto digits = [&](Elem v) {
    Poly d(m, 0);
    for (unsigned i = 0; i < m; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  };
  auto encode = [&](const Poly& d) {
    Elem v = 0;
    for (unsigned i = m; i-- > 0;) v = v * p + (i < d.size() ? d[i] : 0);
    return v;
  };

  Poly mod_poly;
  if (m == 1) {
    mod_poly = {0, 1};
  } else {
    mod_poly = smallest_irreducible(make_field(p, 1), m);
  }
  modulus_.assign(mod_poly.begin(), mod_poly.end());

  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (Elem a = 0; a < q_; ++a) {
    const Poly da = digits(a);
    Poly dn(m);
    for (unsigned i = 0; i < m; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = encode(dn);
    for (Elem b = 0; b < q_; ++b) {
      const Poly db = digits(b);
      Poly s(m);
      for (unsigned i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = encode(s);

      Poly prod(2 * m, 0);
      for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      // Reduce by the monic modulus, integer arithmetic mod p.
      for (unsigned top = 2 * m - 1; top >= m; --top) {
        const unsigned c = prod[top];
        if (c == 0) continue;
        for (unsigned i = 0; i <= m; ++i) {
          const unsigned pos = top - m + i;
          prod[pos] = (prod[pos] + (p - c) * modulus_[i]) % p;
        }
      }
      prod.resize(m);
      mul_[a * q_ + b] = encode(prod);
    }
  }
  for (Elem a = 1; a < q_; ++a)
    for (Elem b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = b;
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw ParameterError("division by zero in " + name());
  return inv_[a];
}

std::string FieldSpec::name() const { return "GF(" + std::to_string(q_) + ")"; }

const FieldSpec& make_field(unsigned p, unsigned m) {
  if (!is_prime(p)) throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1 || m > 4) throw ParameterError("field degree m must be in [1, 4]");
  unsigned q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  if (q > 256) throw ParameterError("field order above 256 is not supported");

  std::lock_guard lock(registry_mutex());
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<FieldSpec>> registry;
  auto& slot = registry[{p, m}];
  if (!slot) slot.reset(new FieldSpec(p, m));
  return *slot;
}

const FieldSpec& make_field_of_order(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned m = 0;
    unsigned r = q;
    while (r % p == 0) {
      r /= p;
      ++m;
    }
    if (r != 1) break;
    return make_field(p, m);
  }
  throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
}

// ---------------------------------------------------------------------------
// F_{q^n}

ExtFieldSpec::ExtFieldSpec(const FieldSpec& base, unsigned n) : base_(&base), n_(n), size_(1) {
  for (unsigned i = 0; i <= n; ++i) {
    qpow_.push_back(size_);
    if (i < n) size_ *= base.q();
  }
  modulus_ = n == 1 ? Poly{0, 1} : smallest_irreducible(base, n);

  if (size_ <= (std::uint64_t{1} << 16)) {
    const std::uint64_t order = size_ - 1;
    const auto factors = prime_factors(order);
    auto slow_pow = [&](Elem a, std::uint64_t e) {
      Elem r = 1;
      while (e) {
        if (e & 1) r = slow_mul(r, a);
        a = slow_mul(a, a);
        e >>= 1;
      }
      return r;
    };
    Elem gen = 0;
    for (Elem g = 1; g < size_; ++g) {
      bool primitive = true;
      for (auto r : factors) {
        if (slow_pow(g, order / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = g;
        break;
      }
    }
    if (gen == 0) throw std::logic_error("no primitive element in " + name());
    exp_.resize(2 * order);
    log_.assign(size_, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp_[i] = exp_[i + order] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = slow_mul(x, gen);
    }
    tables_ = true;
    frob_.resize(size_);
    frob_[0] = 0;
    for (Elem a = 1; a < size_; ++a) frob_[a] = exp_[(log_[a] * std::uint64_t{base.q()}) % order];
    if (base.p() != 2) {
      // Zech logarithms: 1 + g^k = g^{zech_[k]}.
      zech_.resize(order);
      for (std::uint64_t k = 0; k < order; ++k) {
        const Elem sum = digit_add(1, exp_[k]);
        zech_[k] = sum == 0 ? kNoLog : log_[sum];
      }
    }
  }
}

Elem ExtFieldSpec::add(Elem a, Elem b) const {
  if (base_->p() == 2) return a ^ b;
  if (zech_.empty()) return digit_add(a, b);
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint64_t order = size_ - 1;
  const std::uint32_t z = zech_[(log_[b] + order - log_[a]) % order];
  return z == kNoLog ? 0 : exp_[log_[a] + z];
}

Elem ExtFieldSpec::digit_add(Elem a, Elem b) const {
  const unsigned q = base_->q();
  Elem r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    r += base_->add(a % q, b % q) * static_cast<Elem>(qpow_[i]);
    a /= q;
    b /= q;
  }
  return r;
}

Elem ExtFieldSpec::neg(Elem a) const {
  if (base_->p() == 2) return a;
  const unsigned q = base_->q();
  Elem r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    r += base_->neg(a % q) * static_cast<Elem>(qpow_[i]);
    a /= q;
  }
  return r;
}

Elem ExtFieldSpec::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem ExtFieldSpec::scale(Elem c, Elem a) const {
  const unsigned q = base_->q();
  Elem r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    r += base_->mul(c, a % q) * static_cast<Elem>(qpow_[i]);
    a /= q;
  }
  return r;
}

Elem ExtFieldSpec::slow_mul(Elem a, Elem b) const {
  const auto da = to_vector(a);
  const auto db = to_vector(b);
  Poly prod(2 * n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] = base_->add(prod[i + j], base_->mul(da[i], db[j]));
  }
  for (unsigned top = 2 * n_ - 1; top >= n_; --top) {
    const Elem c = prod[top];
    if (c == 0) continue;
    for (unsigned i = 0; i <= n_; ++i) {
      const unsigned pos = top - n_ + i;
      prod[pos] = base_->sub(prod[pos], base_->mul(c, modulus_[i]));
    }
  }
  prod.resize(n_);
  return from_vector(prod);
}

Elem ExtFieldSpec::mul(Elem a, Elem b) const {
  if (!tables_) return slow_mul(a, b);
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Elem ExtFieldSpec::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (tables_) return exp_[(log_[a] * (e % (size_ - 1))) % (size_ - 1)];
  Elem r = 1;
  while (e) {
    if (e & 1) r = slow_mul(r, a);
    a = slow_mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem ExtFieldSpec::inv(Elem a) const {
  if (a == 0) throw ParameterError("division by zero in " + name());
  if (tables_) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return pow(a, size_ - 2);
}

Elem ExtFieldSpec::frobenius(Elem x, unsigned i) const {
  i %= n_;
  if (tables_) {
    for (unsigned k = 0; k < i; ++k) x = frob_[x];
    return x;
  }
  return pow(x, qpow_[i]);
}

std::vector<Elem> ExtFieldSpec::to_vector(Elem x) const {
  const unsigned q = base_->q();
  std::vector<Elem> v(n_);
  for (unsigned i = 0; i < n_; ++i) {
    v[i] = x % q;
    x /= q;
  }
  return v;
}

Elem ExtFieldSpec::from_vector(std::span<const Elem> v) const {
  if (v.size() != n_) throw ParameterError("coordinate vector has wrong length");
  Elem x = 0;
  for (unsigned i = n_; i-- > 0;) {
    if (v[i] >= base_->q()) throw ParameterError("coordinate outside the base field");
    x = x * base_->q() + v[i];
  }
  return x;
}

Elem ExtFieldSpec::basis(unsigned i) const {
  if (i >= n_) throw ParameterError("basis index out of range");
  return static_cast<Elem>(qpow_[i]);
}

std::string ExtFieldSpec::name() const {
  return "GF(" + std::to_string(base_->q()) + "^" + std::to_string(n_) + ")";
}

const ExtFieldSpec& make_extension(const FieldSpec& base, unsigned n) {
  if (n < 1) throw ParameterError("extension degree must be positive");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    size *= base.q();
    if (size > (std::uint64_t{1} << 20)) throw ParameterError("extension fields above 2^20 elements are not supported");
  }
  std::lock_guard lock(registry_mutex());
  static std::map<std::pair<const FieldSpec*, unsigned>, std::unique_ptr<ExtFieldSpec>> registry;
  auto& slot = registry[{&base, n}];
  if (!slot) slot.reset(new ExtFieldSpec(base, n));
  return *slot;
}

}  // namespace cdc
