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

// Exact lower and upper bounds on A_q(n,d,k), best-known value registries and
// regeneration of the published bound tables.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/errors.hpp"

namespace cdc {

enum class BoundKind { Lower, Upper };

struct BoundInput {
  std::string parameter;  // e.g. "A_2(13,6,6)"
  BigInt value;
  std::string source;
};

/// A bound on A_q(n,d,k), where n is the ambient dimension.
struct BoundRecord {
  unsigned q = 0;
  unsigned n = 0;
  unsigned d = 0;
  unsigned k = 0;
  BigInt value;
  BoundKind kind = BoundKind::Lower;
  std::string formula;
  std::vector<BoundInput> inputs;

  std::string label() const;  // "A_q(n,d,k)"
};

/// A_q(2n, 2(n-t), n) >= q^{n(t+1)}.
BoundRecord bound_lifted(unsigned q, unsigned n, unsigned t);

/// A_q((s+1)n, 2(n-t), n) >= sum_{j=0}^{s} q^{(s-j)n(t+1)} S^j with
/// S = sum_{i=n-t}^{t} A_i(Q_{q,n,t}).
BoundRecord bound_multiblock(unsigned q, unsigned n, unsigned t, unsigned s);

/// A_q(2n-1, 2(n-t), n-1) >= floor((q^{n(t+1)} + S) / (q^n + 1)).
BoundRecord bound_johnson_halving(unsigned q, unsigned n, unsigned t);

/// A_q(3k+h, d, k) >= q^{(2k+h)(k-d/2+1)} + (sum_{i=d/2}^{k-d/2} A_i(Q_{q,k,k-d/2})) * input,
/// where input is a lower bound on A_q(2k+h, d, k).
BoundRecord bound_parallel_linkage(unsigned q, unsigned k, unsigned h, unsigned d, const BigInt& input,
                                   const std::string& source = "user");

/// A_q(n, 2 delta, k) <= floor([n, k-delta+1]_q / [k, k-delta+1]_q).
BoundRecord anticode_upper(unsigned q, unsigned n, unsigned delta, unsigned k);

using BoundKey = std::tuple<unsigned, unsigned, unsigned, unsigned>;  // (q, n, d, k)

struct BestKnownRow {
  unsigned q;
  unsigned n;
  unsigned d;
  unsigned k;
  BigInt value;
  std::string source;
};

class BestKnownTable {
 public:
  /// Throws FormatError on a duplicate key or a nonpositive value.
  void add(BestKnownRow row);
  const BestKnownRow* find(unsigned q, unsigned n, unsigned d, unsigned k) const;
  std::vector<BestKnownRow> rows() const;
  std::size_t size() const { return rows_.size(); }

 private:
  std::map<BoundKey, BestKnownRow> rows_;
};

/// CSV with header q,n,d,k,value,source. Throws FormatError on malformed
/// rows and duplicate keys.
BestKnownTable load_best_known(std::istream& in);
BestKnownTable load_best_known(const std::string& path);

/// The table shipped in data/.
std::string default_best_known_path();

struct SkippedRow {
  unsigned q, n, d, k;
  std::string reason;
};

struct TableResult {
  int id = 0;
  std::vector<BoundRecord> records;
  std::vector<SkippedRow> skipped;
};

/// Tables 2 to 5 need no inputs. best_known is only used to fill the old
/// column when formatting.
TableResult generate_table(int id);

/// Parallel linkage rows; rows whose A_q(2k+h,d,k) input is absent are skipped.
TableResult generate_table1(const BestKnownTable& best_known);

enum class Standing { Improvement, Tie, Below, Absent };
const char* to_string(Standing s);

struct ComparisonEntry {
  BoundKey key;
  BigInt value;
  std::optional<BigInt> stored;
  Standing standing;
};

std::vector<ComparisonEntry> compare(const std::vector<BoundRecord>& records, const BestKnownTable& table);

/// Lower-bound records whose value exceeds the anticode bound; empty when consistent.
std::vector<std::string> anticode_violations(const std::vector<BoundRecord>& records);

enum class TableFormat { Csv, Text };

/// Columns A_q(n,d,k), new, old, formula. The old column is filled from
/// best_known when given.
std::string format_table(const TableResult& table, TableFormat format, const BestKnownTable* best_known = nullptr);

struct TableCheck {
  bool pass = false;
  std::size_t compared = 0;
  std::vector<std::string> mismatches;
};

/// Compares computed records with the golden rows for the same id. For
/// table 1 only the computed rows are compared.
TableCheck check_table(const TableResult& table);

}  // namespace cdc
