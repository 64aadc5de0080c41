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

// Explicit constant dimension codes at desk scale: lifted MRD codes,
// linkage, parallel linkage and the multi-block parallel lifted-MRD
// construction.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/errors.hpp"
#include "cdc/gf.hpp"
#include "cdc/linalg.hpp"

namespace cdc {

struct Provenance {
  /// lifted, lifted_rect, grassmannian, linkage, parallel_linkage, multiblock or custom.
  std::string construction = "custom";
  std::map<std::string, std::int64_t> params;

  std::int64_t at(const std::string& key) const;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// A set of subspaces of F_q^N, all intended to have dimension k. Members are
/// kept sorted in canonical order without duplicates.
class CodeSet {
 public:
  CodeSet(const FieldSpec& field, std::size_t ambient_dim, std::size_t k, std::size_t claimed_distance,
          std::vector<Subspace> members, Provenance provenance);

  const FieldSpec& field() const { return *field_; }
  unsigned q() const { return field_->q(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t k() const { return k_; }
  std::size_t claimed_distance() const { return claimed_distance_; }
  std::span<const Subspace> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Provenance& provenance() const { return provenance_; }
  bool contains(const Subspace& s) const;

 private:
  const FieldSpec* field_;
  std::size_t ambient_;
  std::size_t k_;
  std::size_t claimed_distance_;
  std::vector<Subspace> members_;
  Provenance provenance_;
};

/// Cardinality the construction formula predicts for this provenance; empty
/// for custom codes.
std::optional<BigInt> predicted_size(const Provenance& provenance);

/// Rows of (I_n | A), A in Q_{q,n,t}: q^{n(t+1)} subspaces of F_q^{2n}, distance 2(n-t).
CodeSet lifted_mrd_code(unsigned q, unsigned n, unsigned t, std::uint64_t budget = kDefaultBudget);

/// Rows of (I_k | Q), Q in Q_{q,k x (k+h),t}: subspaces of F_q^{2k+h}, distance 2(k-t).
CodeSet lifted_rect_mrd_code(unsigned q, unsigned k, unsigned h, unsigned t, std::uint64_t budget = kDefaultBudget);

/// Every k-dimensional subspace of F_q^N (distance 2).
CodeSet grassmannian(unsigned q, unsigned ambient_dim, unsigned k, std::uint64_t budget = kDefaultBudget);

/// {Im(U | Q)} for U a generator of u_code and Q in q_code (k x n2 matrices
/// with rank distance >= d2). Distance min(d1, 2 d2).
CodeSet linkage(const CodeSet& u_code, std::span<const Matrix> q_code, unsigned d2,
                std::uint64_t budget = kDefaultBudget);

struct ParallelLinkageGenerators {
  /// (I_k | Q_rect | Q), Q_rect in Q_{q,k x (k+h),k-d/2}, Q in Q_{q,k,k-d/2}.
  std::vector<Matrix> first;
  /// (Q' | V), Q' of rank d/2..k-d/2 in Q_{q,k,k-d/2}, V a generator of the V code.
  std::vector<Matrix> second;
};

ParallelLinkageGenerators parallel_linkage_generators(unsigned q, unsigned k, unsigned h, unsigned d,
                                                      const CodeSet& v_code, std::uint64_t budget = kDefaultBudget);

/// Parallel linkage on ambient 3k+h with distance d.
CodeSet parallel_linkage(unsigned q, unsigned k, unsigned h, unsigned d, const CodeSet& v_code,
                         std::uint64_t budget = kDefaultBudget);

/// Default V: the full Grassmannian for d = 2, otherwise the lifted
/// (rectangular) MRD code on ambient 2k+h.
CodeSet default_parallel_linkage_v(unsigned q, unsigned k, unsigned h, unsigned d,
                                   std::uint64_t budget = kDefaultBudget);

/// n x (s+1)n generator with I_n at block identity_pos.
struct BlockGenerator {
  std::size_t identity_pos = 0;
  /// All s+1 blocks; blocks[identity_pos] is I_n.
  std::vector<Matrix> blocks;

  Matrix generator() const { return hstack(blocks); }
};

/// Generators of the multi-block construction: for identity position j, blocks
/// before j range over the nonzero maps with kernel dimension >= n-t, blocks
/// after j over all of Q_{q,n,t}.
std::vector<BlockGenerator> multiblock_generators(unsigned q, unsigned n, unsigned t, unsigned s,
                                                  std::uint64_t budget = kDefaultBudget);

CodeSet multiblock_parallel_mrd(unsigned q, unsigned n, unsigned t, unsigned s,
                                std::uint64_t budget = kDefaultBudget);

struct PairwiseBound {
  std::size_t bound;
  std::size_t intersection;
};

/// For generators with identity at distinct positions i and j: returns
/// n - rank(I_n - A_j B_i) and the actual intersection dimension; throws
/// std::logic_error if the intersection exceeds the bound.
PairwiseBound intersection_bound_pairwise(const BlockGenerator& u, const BlockGenerator& v);

}  // namespace cdc
