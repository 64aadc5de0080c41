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

#include "cdc/construct.hpp"

#include <algorithm>
#include <utility>

#include "cdc/qpoly.hpp"
#include "cdc/rankdist.hpp"

namespace cdc {

std::int64_t Provenance::at(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw ParameterError("provenance of '" + construction + "' lacks parameter " + key);
  return it->second;
}

CodeSet::CodeSet(const FieldSpec& field, std::size_t ambient_dim, std::size_t k, std::size_t claimed_distance,
                 std::vector<Subspace> members, Provenance provenance)
    : field_(&field),
      ambient_(ambient_dim),
      k_(k),
      claimed_distance_(claimed_distance),
      members_(std::move(members)),
      provenance_(std::move(provenance)) {
  for (const auto& m : members_)
    if (&m.field() != field_) throw ParameterError("code member over the wrong field");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool CodeSet::contains(const Subspace& s) const { return std::binary_search(members_.begin(), members_.end(), s); }

namespace {

unsigned param(const Provenance& p, const char* key) { return static_cast<unsigned>(p.at(key)); }

BigInt multiblock_size(unsigned q, unsigned n, unsigned t, unsigned s) {
  const BigInt restricted = restricted_block_size(q, n, t);
  BigInt total = 0;
  for (unsigned j = 0; j <= s; ++j)
    total += ipow(q, std::uint64_t{s - j} * n * (t + 1)) * boost::multiprecision::pow(restricted, j);
  return total;
}

std::uint64_t within_budget(const BigInt& count, std::uint64_t budget, const std::string& what) {
  if (count > budget) throw BudgetExceeded(what + " would have " + count.str() + " members, above the budget " + std::to_string(budget));
  return static_cast<std::uint64_t>(count);
}

CodeSet finish(const FieldSpec& field, std::size_t ambient, std::size_t k, std::size_t distance,
               std::vector<Subspace> members, Provenance provenance) {
  CodeSet code(field, ambient, k, distance, std::move(members), std::move(provenance));
  if (auto expected = predicted_size(code.provenance()); expected && *expected != code.size()) {
    throw std::logic_error(code.provenance().construction + " produced " + std::to_string(code.size()) +
                           " distinct members, formula predicts " + expected->str());
  }
  return code;
}

// Exhaustive check that every pair in `code` is at least `d` apart; codes
// larger than the cap are trusted on their claimed distance.
void require_distance(const CodeSet& code, std::size_t d, const char* what) {
  if (code.claimed_distance() < d) throw ParameterError(std::string(what) + " has claimed distance below the required one");
  const auto members = code.members();
  if (members.size() > 5000) return;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (subspace_distance(members[i], members[j]) < d) throw ParameterError(std::string(what) + " violates its distance");
}

std::vector<Matrix> all_matrices(const GabidulinCode& code) {
  std::vector<Matrix> out;
  out.reserve(code.size());
  for (std::uint64_t i = 0; i < code.size(); ++i) out.push_back(code.matrix(i));
  return out;
}

}  // namespace

std::optional<BigInt> predicted_size(const Provenance& p) {
  const std::string& c = p.construction;
  if (c == "lifted") return ipow(param(p, "q"), std::uint64_t{param(p, "n")} * (param(p, "t") + 1));
  if (c == "lifted_rect")
    return ipow(param(p, "q"), std::uint64_t{param(p, "k") + param(p, "h")} * (param(p, "t") + 1));
  if (c == "grassmannian") return gaussian_binomial(param(p, "N"), param(p, "k"), param(p, "q"));
  if (c == "linkage") return BigInt(p.at("u_size")) * p.at("q_size");
  if (c == "parallel_linkage") {
    const unsigned q = param(p, "q"), k = param(p, "k"), h = param(p, "h"), d = param(p, "d");
    const unsigned t = k - d / 2;
    return ipow(q, std::uint64_t{2 * k + h} * (t + 1)) + filtration_size(q, k, t, d / 2) * p.at("v_size");
  }
  if (c == "multiblock") return multiblock_size(param(p, "q"), param(p, "n"), param(p, "t"), param(p, "s"));
  return std::nullopt;
}

CodeSet lifted_mrd_code(unsigned q, unsigned n, unsigned t, std::uint64_t budget) {
  const GabidulinCode code = enumerate_mrd(q, n, t, budget);
  const FieldSpec& f = code.base();
  const Matrix id = Matrix::identity(f, n);
  std::vector<Subspace> members;
  members.reserve(code.size());
  for (std::uint64_t i = 0; i < code.size(); ++i) members.push_back(subspace_from_rows(hstack({id, code.matrix(i)})));
  return finish(f, 2 * n, n, 2 * (n - t), std::move(members),
                {"lifted", {{"q", q}, {"n", n}, {"t", t}}});
}

CodeSet lifted_rect_mrd_code(unsigned q, unsigned k, unsigned h, unsigned t, std::uint64_t budget) {
  const RectGabidulinCode code = enumerate_rect_mrd(q, k, h, t, budget);
  const FieldSpec& f = code.base();
  const Matrix id = Matrix::identity(f, k);
  std::vector<Subspace> members;
  members.reserve(code.size());
  for (std::uint64_t i = 0; i < code.size(); ++i) members.push_back(subspace_from_rows(hstack({id, code.matrix(i)})));
  return finish(f, 2 * k + h, k, 2 * (k - t), std::move(members),
                {"lifted_rect", {{"q", q}, {"k", k}, {"h", h}, {"t", t}}});
}

CodeSet grassmannian(unsigned q, unsigned ambient_dim, unsigned k, std::uint64_t budget) {
  if (k > ambient_dim) throw ParameterError("grassmannian needs k <= N");
  within_budget(gaussian_binomial(ambient_dim, k, q), budget, "Grassmannian");
  const FieldSpec& f = make_field_of_order(q);
  std::vector<Subspace> members;

  // Walk pivot sets in lexicographic order; fill every free entry to the
  // right of each pivot that is not itself a pivot column.
  std::vector<unsigned> pivots(k);
  for (unsigned i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<unsigned, unsigned>> free_cells;
    for (unsigned r = 0; r < k; ++r)
      for (unsigned c = pivots[r] + 1; c < ambient_dim; ++c)
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) free_cells.emplace_back(r, c);
    std::vector<Elem> fill(free_cells.size(), 0);
    while (true) {
      Matrix m(f, k, ambient_dim);
      for (unsigned r = 0; r < k; ++r) m(r, pivots[r]) = 1;
      for (std::size_t i = 0; i < free_cells.size(); ++i) m(free_cells[i].first, free_cells[i].second) = fill[i];
      members.push_back(subspace_from_rows(m));
      std::size_t pos = 0;
      while (pos < fill.size() && ++fill[pos] == q) fill[pos++] = 0;
      if (pos == fill.size()) break;
    }
    int r = static_cast<int>(k) - 1;
    while (r >= 0 && pivots[r] == ambient_dim - k + r) --r;
    if (r < 0) break;
    ++pivots[r];
    for (unsigned i = r + 1; i < k; ++i) pivots[i] = pivots[i - 1] + 1;
  }
  return finish(f, ambient_dim, k, 2, std::move(members),
                {"grassmannian", {{"q", q}, {"N", ambient_dim}, {"k", k}}});
}

CodeSet linkage(const CodeSet& u_code, std::span<const Matrix> q_code, unsigned d2, std::uint64_t budget) {
  const FieldSpec& f = u_code.field();
  const std::size_t k = u_code.k();
  if (q_code.empty()) throw ParameterError("linkage needs a nonempty rank-metric code");
  const std::size_t n2 = q_code.front().cols();
  for (const auto& qm : q_code)
    if (&qm.field() != &f || qm.rows() != k || qm.cols() != n2) throw ParameterError("rank-metric codewords must all be k x n2 over the same field");
  for (const auto& u : u_code.members())
    if (u.dim() != k) throw ParameterError("linkage generator is rank deficient");
  const std::uint64_t pairs = static_cast<std::uint64_t>(q_code.size()) * (q_code.size() - 1) / 2;
  if (pairs <= 10'000'000) {
    for (std::size_t i = 0; i < q_code.size(); ++i)
      for (std::size_t j = i + 1; j < q_code.size(); ++j)
        if (rank(q_code[i] - q_code[j]) < d2) throw ParameterError("rank-metric code has distance below d2");
  }
  within_budget(BigInt(u_code.size()) * q_code.size(), budget, "linkage");

  std::vector<Subspace> members;
  members.reserve(u_code.size() * q_code.size());
  for (const auto& u : u_code.members())
    for (const auto& qm : q_code) members.push_back(subspace_from_rows(hstack({u.basis(), qm})));
  const std::size_t distance = std::min<std::size_t>(u_code.claimed_distance(), 2 * d2);
  Provenance prov{"linkage",
                  {{"q", f.q()},
                   {"n1", static_cast<std::int64_t>(u_code.ambient_dim())},
                   {"n2", static_cast<std::int64_t>(n2)},
                   {"k", static_cast<std::int64_t>(k)},
                   {"d1", static_cast<std::int64_t>(u_code.claimed_distance())},
                   {"d2", d2},
                   {"u_size", static_cast<std::int64_t>(u_code.size())},
                   {"q_size", static_cast<std::int64_t>(q_code.size())}}};
  return finish(f, u_code.ambient_dim() + n2, k, distance, std::move(members), std::move(prov));
}

ParallelLinkageGenerators parallel_linkage_generators(unsigned q, unsigned k, unsigned h, unsigned d,
                                                      const CodeSet& v_code, std::uint64_t budget) {
  if (d == 0 || d % 2 != 0 || d > k) throw ParameterError("parallel linkage needs d even with 2 <= d <= k");
  const FieldSpec& f = make_field_of_order(q);
  if (&v_code.field() != &f || v_code.k() != k || v_code.ambient_dim() != 2 * k + h)
    throw ParameterError("V code must consist of k-dimensional subspaces of F_q^{2k+h}");
  for (const auto& v : v_code.members())
    if (v.dim() != k) throw ParameterError("V code member has the wrong dimension");
  require_distance(v_code, d, "V code");

  const unsigned t = k - d / 2;
  Provenance prov{"parallel_linkage", {{"q", q}, {"k", k}, {"h", h}, {"d", d}, {"v_size", static_cast<std::int64_t>(v_code.size())}}};
  within_budget(*predicted_size(prov), budget, "parallel linkage");

  const RectGabidulinCode rect = enumerate_rect_mrd(q, k, h, t, budget);
  const GabidulinCode square = enumerate_mrd(q, k, t, budget);
  const std::vector<Matrix> square_all = all_matrices(square);
  const Matrix id = Matrix::identity(f, k);

  ParallelLinkageGenerators gens;
  gens.first.reserve(rect.size() * square.size());
  for (std::uint64_t i = 0; i < rect.size(); ++i) {
    const Matrix left = hstack({id, rect.matrix(i)});
    for (const auto& qm : square_all) gens.first.push_back(hstack({left, qm}));
  }
  // Nonzero maps of rank <= k - d/2, i.e. kernel dimension >= d/2.
  for (std::uint64_t idx : enumerate_filtration(square, d / 2))
    for (const auto& v : v_code.members()) gens.second.push_back(hstack({square_all[idx], v.basis()}));
  return gens;
}

CodeSet parallel_linkage(unsigned q, unsigned k, unsigned h, unsigned d, const CodeSet& v_code, std::uint64_t budget) {
  const auto gens = parallel_linkage_generators(q, k, h, d, v_code, budget);
  std::vector<Subspace> members;
  members.reserve(gens.first.size() + gens.second.size());
  for (const auto& g : gens.first) members.push_back(subspace_from_rows(g));
  for (const auto& g : gens.second) members.push_back(subspace_from_rows(g));
  return finish(v_code.field(), 3 * k + h, k, d, std::move(members),
                {"parallel_linkage", {{"q", q}, {"k", k}, {"h", h}, {"d", d}, {"v_size", static_cast<std::int64_t>(v_code.size())}}});
}

CodeSet default_parallel_linkage_v(unsigned q, unsigned k, unsigned h, unsigned d, std::uint64_t budget) {
  if (d == 0 || d % 2 != 0 || d > k) throw ParameterError("parallel linkage needs d even with 2 <= d <= k");
  if (d == 2) return grassmannian(q, 2 * k + h, k, budget);
  return lifted_rect_mrd_code(q, k, h, k - d / 2, budget);
}

std::vector<BlockGenerator> multiblock_generators(unsigned q, unsigned n, unsigned t, unsigned s, std::uint64_t budget) {
  if (t >= n || 2 * t < n) throw ParameterError("multiblock construction needs n/2 <= t < n");
  if (s < 1) throw ParameterError("multiblock construction needs s >= 1");
  within_budget(multiblock_size(q, n, t, s), budget, "multiblock construction");

  const GabidulinCode code = enumerate_mrd(q, n, t, budget);
  const std::vector<Matrix> full = all_matrices(code);
  std::vector<Matrix> restricted;
  for (std::uint64_t idx : enumerate_filtration(code, n - t)) restricted.push_back(full[idx]);
  const Matrix id = Matrix::identity(code.base(), n);

  std::vector<BlockGenerator> out;
  for (unsigned j = 0; j <= s; ++j) {
    // Odometer over the s non-identity blocks.
    std::vector<std::size_t> choice(s, 0);
    auto pool_size = [&](unsigned slot) { return slot < j ? restricted.size() : full.size(); };
    bool empty_pool = false;
    for (unsigned slot = 0; slot < s; ++slot) empty_pool |= pool_size(slot) == 0;
    if (empty_pool) continue;
    while (true) {
      BlockGenerator g;
      g.identity_pos = j;
      for (unsigned pos = 0, slot = 0; pos <= s; ++pos) {
        if (pos == j) {
          g.blocks.push_back(id);
        } else {
          g.blocks.push_back(slot < j ? restricted[choice[slot]] : full[choice[slot]]);
          ++slot;
        }
      }
      out.push_back(std::move(g));
      unsigned slot = 0;
      while (slot < s && ++choice[slot] == pool_size(slot)) choice[slot++] = 0;
      if (slot == s) break;
    }
  }
  return out;
}

CodeSet multiblock_parallel_mrd(unsigned q, unsigned n, unsigned t, unsigned s, std::uint64_t budget) {
  const auto gens = multiblock_generators(q, n, t, s, budget);
  std::vector<Subspace> members;
  members.reserve(gens.size());
  for (const auto& g : gens) members.push_back(subspace_from_rows(g.generator()));
  return finish(make_field_of_order(q), (s + 1) * n, n, 2 * (n - t), std::move(members),
                {"multiblock", {{"q", q}, {"n", n}, {"t", t}, {"s", s}}});
}

PairwiseBound intersection_bound_pairwise(const BlockGenerator& u, const BlockGenerator& v) {
  const std::size_t i = u.identity_pos;
  const std::size_t j = v.identity_pos;
  if (u.blocks.size() != v.blocks.size() || i >= u.blocks.size() || j >= v.blocks.size())
    throw ParameterError("malformed block generators");
  if (i == j) throw ParameterError("pairwise bound needs identity blocks at different positions");
  const Matrix& a_j = u.blocks[j];
  const Matrix& b_i = v.blocks[i];
  const std::size_t n = a_j.rows();
  const std::size_t bound = n - rank(Matrix::identity(a_j.field(), n) - a_j * b_i);
  const std::size_t inter = intersection_dim(subspace_from_rows(u.generator()), subspace_from_rows(v.generator()));
  if (inter > bound) throw std::logic_error("intersection exceeds n - rank(I - A_j B_i)");
  return {bound, inter};
}

}  // namespace cdc
