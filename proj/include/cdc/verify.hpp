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

// Verification oracles for built codes: minimum distance (exhaustive and
// sampled), empirical rank distributions and a machine-readable report.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cdc/construct.hpp"
#include "cdc/linalg.hpp"
#include "cdc/qpoly.hpp"

namespace cdc {

inline constexpr std::size_t kDefaultExhaustiveCap = 5000;

struct DistanceResult {
  /// Empty when the code has fewer than two members (distance +infinity).
  std::optional<std::size_t> distance;
  /// Member indices (i < j) of the lexicographically smallest minimizing pair.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::uint64_t pairs_checked = 0;
};

/// Exact minimum subspace distance over all unordered pairs. Throws
/// BudgetExceeded when the code is larger than `cap`. threads = 0 picks the
/// hardware concurrency; the result does not depend on it.
DistanceResult min_distance_exhaustive(const CodeSet& code, std::size_t cap = kDefaultExhaustiveCap,
                                       unsigned threads = 0);

/// xorshift64* with state seeded through one splitmix64 step.
class PairSampler {
 public:
  explicit PairSampler(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform pair i != j of indices below n (n >= 2), returned with i < j.
  std::pair<std::size_t, std::size_t> pair(std::size_t n);

 private:
  std::uint64_t state_;
};

struct SampledDistanceResult {
  std::optional<std::size_t> distance;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations = 0;
  /// First sampled pair closer than the claimed distance.
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;
};

/// Minimum over `pairs` uniformly sampled pairs; never below the true minimum.
SampledDistanceResult min_distance_sampled(const CodeSet& code, std::uint64_t pairs, std::uint64_t seed);

/// Exact minimum of rank(A - B) over distinct pairs of matrices.
std::optional<std::size_t> min_rank_distance_exhaustive(std::span<const Matrix> matrices);

/// counts[r] = number of matrices of rank r.
std::vector<std::uint64_t> empirical_rank_distribution(std::span<const Matrix> matrices);
std::vector<std::uint64_t> empirical_rank_distribution(const GabidulinCode& code);

struct CheckResult {
  std::string check;
  bool pass = false;
  nlohmann::json expected;
  nlohmann::json actual;
  nlohmann::json witness;  // null when absent
};

struct Report {
  std::vector<CheckResult> checks;

  bool pass() const;
  const CheckResult* find(const std::string& check) const;
  nlohmann::json to_json() const;
};

struct ValidateOptions {
  std::size_t exhaustive_cap = kDefaultExhaustiveCap;
  /// Force sampling even under the cap.
  bool sampled = false;
  std::uint64_t sample_pairs = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

/// Membership invariants, cardinality against the provenance formula and the
/// claimed distance. Failures are report entries, never exceptions.
Report validate_codeset(const CodeSet& code, const ValidateOptions& options = {});

nlohmann::json subspace_to_json(const Subspace& s);

}  // namespace cdc
