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

#include "cdc/verify.hpp"

#include <algorithm>
#include <thread>
#include <tuple>

namespace cdc {

namespace {

using Best = std::tuple<std::size_t, std::size_t, std::size_t>;  // (distance, i, j)

unsigned worker_count(unsigned requested, std::size_t rows) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(rows, 1)));
}

nlohmann::json witness_json(const CodeSet& code, std::size_t i, std::size_t j, std::size_t d) {
  return {{"pair", {i, j}},
          {"distance", d},
          {"members", {subspace_to_json(code.members()[i]), subspace_to_json(code.members()[j])}}};
}

}  // namespace

nlohmann::json subspace_to_json(const Subspace& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const auto row = s.basis().row(r);
    rows.push_back(std::vector<Elem>(row.begin(), row.end()));
  }
  return rows;
}

DistanceResult min_distance_exhaustive(const CodeSet& code, std::size_t cap, unsigned threads) {
  const auto members = code.members();
  const std::size_t n = members.size();
  if (n > cap) {
    throw BudgetExceeded("exhaustive distance check over " + std::to_string(n) + " members exceeds the cap " +
                         std::to_string(cap));
  }
  DistanceResult result;
  if (n < 2) return result;

  const unsigned workers = worker_count(threads, n);
  std::vector<std::optional<Best>> best(workers);
  auto run = [&](unsigned w) {
    std::optional<Best> local;
    for (std::size_t i = w; i < n; i += workers)
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t d = subspace_distance(members[i], members[j]);
        if (!local || Best{d, i, j} < *local) local = Best{d, i, j};
      }
    best[w] = local;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  std::optional<Best> overall;
  for (const auto& b : best)
    if (b && (!overall || *b < *overall)) overall = b;
  result.distance = std::get<0>(*overall);
  result.witness = std::pair{std::get<1>(*overall), std::get<2>(*overall)};
  result.pairs_checked = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  return result;
}

PairSampler::PairSampler(std::uint64_t seed) {
  // splitmix64 step; keeps the xorshift state nonzero for every seed.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  state_ = z ^ (z >> 31);
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ull;
}

std::uint64_t PairSampler::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1Dull;
}

std::pair<std::size_t, std::size_t> PairSampler::pair(std::size_t n) {
  if (n < 2) throw ParameterError("sampling a pair needs at least two members");
  while (true) {
    const std::size_t i = next() % n;
    const std::size_t j = next() % n;
    if (i != j) return {std::min(i, j), std::max(i, j)};
  }
}

SampledDistanceResult min_distance_sampled(const CodeSet& code, std::uint64_t pairs, std::uint64_t seed) {
  if (pairs < 1) throw ParameterError("sampled distance check needs at least one pair");
  SampledDistanceResult result;
  const auto members = code.members();
  if (members.size() < 2) return result;
  PairSampler sampler(seed);
  std::optional<Best> best;
  for (std::uint64_t s = 0; s < pairs; ++s) {
    const auto [i, j] = sampler.pair(members.size());
    const std::size_t d = subspace_distance(members[i], members[j]);
    if (!best || Best{d, i, j} < *best) best = Best{d, i, j};
    if (d < code.claimed_distance()) {
      if (result.violations++ == 0) result.first_violation = std::pair{i, j};
    }
  }
  result.distance = std::get<0>(*best);
  result.witness = std::pair{std::get<1>(*best), std::get<2>(*best)};
  result.pairs_checked = pairs;
  return result;
}

std::optional<std::size_t> min_rank_distance_exhaustive(std::span<const Matrix> matrices) {
  std::optional<std::size_t> best;
  if (matrices.empty()) return best;
  const bool packed = matrices.front().field().q() == 2 && matrices.front().cols() <= 64;
  if (packed) {
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(matrices.size());
    for (const auto& m : matrices) rows.push_back(gf2::pack(m));
    std::vector<std::uint64_t> diff(matrices.front().rows());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        for (std::size_t r = 0; r < diff.size(); ++r) diff[r] = rows[i][r] ^ rows[j][r];
        const std::size_t d = gf2::rank(diff);
        if (!best || d < *best) best = d;
      }
    return best;
  }
  for (std::size_t i = 0; i < matrices.size(); ++i)
    for (std::size_t j = i + 1; j < matrices.size(); ++j) {
      const std::size_t d = rank(matrices[i] - matrices[j]);
      if (!best || d < *best) best = d;
    }
  return best;
}

std::vector<std::uint64_t> empirical_rank_distribution(std::span<const Matrix> matrices) {
  std::vector<std::uint64_t> counts;
  for (const auto& m : matrices) {
    const std::size_t r = rank(m);
    if (counts.size() <= std::max(r, m.rows())) counts.resize(std::max(r, m.rows()) + 1, 0);
    ++counts[r];
  }
  return counts;
}

std::vector<std::uint64_t> empirical_rank_distribution(const GabidulinCode& code) {
  std::vector<std::uint64_t> counts(code.n() + 1, 0);
  for (std::uint64_t i = 0; i < code.size(); ++i) ++counts[rank(code.matrix(i))];
  return counts;
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Report::find(const std::string& check) const {
  for (const auto& c : checks)
    if (c.check == check) return &c;
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"check", c.check}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}};
    if (!c.witness.is_null()) j["witness"] = c.witness;
    arr.push_back(std::move(j));
  }
  return {{"pass", pass()}, {"checks", std::move(arr)}};
}

Report validate_codeset(const CodeSet& code, const ValidateOptions& options) {
  Report report;
  const auto members = code.members();

  {
    CheckResult c{"dimension", true, {{"k", code.k()}, {"N", code.ambient_dim()}}, nullptr, nullptr};
    std::size_t bad = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i].dim() != code.k() || members[i].ambient_dim() != code.ambient_dim()) {
        if (bad++ == 0) c.witness = {{"member", i}, {"dim", members[i].dim()}, {"ambient", members[i].ambient_dim()}};
      }
    }
    c.pass = bad == 0;
    c.actual = {{"mismatched_members", bad}};
    report.checks.push_back(std::move(c));
  }

  {
    CheckResult c{"cardinality", true, nullptr, members.size(), nullptr};
    try {
      if (auto expected = predicted_size(code.provenance())) {
        c.expected = expected->str();
        c.actual = std::to_string(members.size());
        c.pass = *expected == members.size();
      }
    } catch (const std::exception& e) {
      c.pass = false;
      c.expected = std::string("unavailable: ") + e.what();
    }
    report.checks.push_back(std::move(c));
  }

  const nlohmann::json expected_distance = {{">=", code.claimed_distance()}};
  if (!options.sampled && members.size() <= options.exhaustive_cap) {
    const auto r = min_distance_exhaustive(code, options.exhaustive_cap, options.threads);
    CheckResult c{"distance_exhaustive", true, expected_distance, nullptr, nullptr};
    if (r.distance) {
      c.actual = {{"min_distance", *r.distance}, {"pairs", r.pairs_checked}};
      c.pass = *r.distance >= code.claimed_distance();
      c.witness = witness_json(code, r.witness->first, r.witness->second, *r.distance);
    } else {
      c.actual = {{"min_distance", "inf"}, {"pairs", 0}};
    }
    report.checks.push_back(std::move(c));
  } else {
    CheckResult c{"distance_sampled", true, expected_distance, nullptr, nullptr};
    if (members.size() >= 2) {
      const auto r = min_distance_sampled(code, options.sample_pairs, options.seed);
      c.actual = {{"min_distance", *r.distance}, {"pairs", r.pairs_checked}, {"violations", r.violations}, {"seed", options.seed}};
      c.pass = r.violations == 0;
      if (r.first_violation) {
        const auto [i, j] = *r.first_violation;
        c.witness = witness_json(code, i, j, subspace_distance(members[i], members[j]));
      } else {
        c.witness = witness_json(code, r.witness->first, r.witness->second, *r.distance);
      }
    } else {
      c.actual = {{"min_distance", "inf"}, {"pairs", 0}};
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace cdc
