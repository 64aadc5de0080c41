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

// Exact counting: Gaussian binomials and the rank distribution of square
// MRD codes, all in arbitrary precision.

#include <optional>
#include <vector>

#include "cdc/bigint.hpp"

namespace cdc {

/// Number of k-dimensional subspaces of F_q^n; 0 when k > n.
BigInt gaussian_binomial(unsigned n, unsigned k, unsigned q);

struct RankDistribution {
  unsigned q = 0;
  unsigned n = 0;
  unsigned d = 0;
  /// counts[r] = A_r for r = 0..n.
  std::vector<BigInt> counts;

  const BigInt& operator[](unsigned r) const { return counts.at(r); }
  BigInt total() const;
};

/// Rank distribution of any MRD code in M_{n x n}(F_q) with rank distance d.
RankDistribution delsarte_distribution(unsigned q, unsigned n, unsigned d);

struct FirstThree {
  BigInt a_d;
  std::optional<BigInt> a_d1;
  std::optional<BigInt> a_d2;
};

/// Closed forms for A_d, A_{d+1}, A_{d+2}; entries beyond n are left empty.
FirstThree closed_form_first_three(unsigned q, unsigned n, unsigned d);

/// |Q_{q,n,t,j}| = sum_{i=n-t}^{n-j} A_i(Q_{q,n,t}), nonzero maps only.
BigInt filtration_size(unsigned q, unsigned n, unsigned t, unsigned j);

/// q^{n(n-d+1)}.
BigInt lifted_mrd_size(unsigned q, unsigned n, unsigned d);

/// sum_{i=n-t}^{t} A_i(Q_{q,n,t}): the restricted block size used by the
/// multi-block construction (requires 2t >= n).
BigInt restricted_block_size(unsigned q, unsigned n, unsigned t);

}  // namespace cdc
