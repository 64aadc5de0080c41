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

#include "cdc/rankdist.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "cdc/errors.hpp"

namespace cdc {

BigInt gaussian_binomial(unsigned n, unsigned k, unsigned q) {
  if (k > n) return 0;
  if (q < 2) throw ParameterError("gaussian_binomial needs q >= 2");
  // After step i the running value is [n, i+1]_q, so every division is exact.
  BigInt result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= ipow(q, n - i) - 1;
    result = exact_div(result, ipow(q, i + 1) - 1);
  }
  return result;
}

BigInt RankDistribution::total() const {
  BigInt s = 0;
  for (const auto& a : counts) s += a;
  return s;
}

RankDistribution delsarte_distribution(unsigned q, unsigned n, unsigned d) {
  if (d < 1 || d > n) throw ParameterError("delsarte_distribution needs 1 <= d <= n");
  static std::mutex mu;
  static std::map<std::tuple<unsigned, unsigned, unsigned>, RankDistribution> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({q, n, d}); it != cache.end()) return it->second;
  }

  RankDistribution dist{q, n, d, std::vector<BigInt>(n + 1, 0)};
  dist.counts[0] = 1;
  for (unsigned r = d; r <= n; ++r) {
    BigInt sum = 0;
    for (unsigned i = 0; i <= r - d; ++i) {
      // q^{n(n-d+1)} / q^{n(n+i-r)} - 1 = q^{n(r-i-d+1)} - 1, exponent >= n.
      BigInt term = ipow(q, i == 0 ? 0 : std::uint64_t{i} * (i - 1) / 2) * gaussian_binomial(r, i, q) *
                    (ipow(q, std::uint64_t{n} * (r - i - d + 1)) - 1);
      if (i % 2) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    dist.counts[r] = gaussian_binomial(n, r, q) * sum;
  }
  if (dist.total() != lifted_mrd_size(q, n, d)) throw std::logic_error("rank distribution does not normalize");

  std::lock_guard lock(mu);
  cache.emplace(std::make_tuple(q, n, d), dist);
  return dist;
}

FirstThree closed_form_first_three(unsigned q, unsigned n, unsigned d) {
  if (d < 1 || d > n) throw ParameterError("closed_form_first_three needs 1 <= d <= n");
  const BigInt qn = ipow(q, n);
  FirstThree out;
  out.a_d = (qn - 1) * gaussian_binomial(n, d, q);
  if (d + 1 <= n) {
    const BigInt inner = ipow(q, 2 * n) - 1 - exact_div(ipow(q, d + 1) - 1, BigInt(q - 1)) * (qn - 1);
    out.a_d1 = gaussian_binomial(n, d + 1, q) * inner;
  }
  if (d + 2 <= n) {
    // q (q^{d+2}-1)/(q^2-1) (q^{d+1}-1)/(q-1) (q^n-1); the two fractions are
    // only integral as a product.
    const BigInt pair = exact_div((ipow(q, d + 2) - 1) * (ipow(q, d + 1) - 1), BigInt(q * q - 1) * (q - 1));
    const BigInt inner = ipow(q, 3 * n) - 1 - exact_div(ipow(q, d + 2) - 1, BigInt(q - 1)) * (ipow(q, 2 * n) - 1) +
                         q * pair * (qn - 1);
    out.a_d2 = gaussian_binomial(n, d + 2, q) * inner;
  }
  return out;
}

BigInt filtration_size(unsigned q, unsigned n, unsigned t, unsigned j) {
  if (!(j <= t && t < n)) throw ParameterError("filtration_size needs 0 <= j <= t < n");
  const auto dist = delsarte_distribution(q, n, n - t);
  BigInt s = 0;
  for (unsigned i = n - t; i <= n - j; ++i) s += dist[i];
  return s;
}

BigInt lifted_mrd_size(unsigned q, unsigned n, unsigned d) {
  if (d < 1 || d > n) throw ParameterError("lifted_mrd_size needs 1 <= d <= n");
  return ipow(q, std::uint64_t{n} * (n - d + 1));
}

BigInt restricted_block_size(unsigned q, unsigned n, unsigned t) {
  if (!(t < n && 2 * t >= n)) throw ParameterError("restricted block needs n/2 <= t < n");
  return filtration_size(q, n, t, n - t);
}

}  // namespace cdc
