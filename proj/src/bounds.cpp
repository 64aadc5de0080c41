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

#include "cdc/bounds.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cdc/gf.hpp"
#include "cdc/golden.hpp"
#include "cdc/rankdist.hpp"

namespace cdc {

namespace {

constexpr unsigned kTableQs[] = {2, 3, 4, 5, 7, 8, 9};

bool is_prime_power(unsigned q) {
  if (q < 2) return false;
  unsigned p = 2;
  while (q % p) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

void require_q(unsigned q) {
  if (!is_prime_power(q)) throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
}

std::string make_label(unsigned q, unsigned n, unsigned d, unsigned k) {
  return "A_" + std::to_string(q) + "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(k) +
         ")";
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

unsigned parse_unsigned(const std::string& cell, std::size_t line) {
  if (!all_digits(cell) || cell.size() > 9) {
    throw FormatError("best-known line " + std::to_string(line) + ": bad integer '" + cell + "'");
  }
  return static_cast<unsigned>(std::stoul(cell));
}

void require_anticode_consistent(const TableResult& result) {
  if (const auto bad = anticode_violations(result.records); !bad.empty()) {
    throw std::logic_error("lower bound above the anticode bound: " + bad.front());
  }
}

std::string csv_quote(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

}  // namespace

std::string BoundRecord::label() const { return make_label(q, n, d, k); }

BoundRecord bound_lifted(unsigned q, unsigned n, unsigned t) {
  require_q(q);
  if (t >= n) throw ParameterError("lifted bound needs t < n");
  return {q, 2 * n, 2 * (n - t), n, lifted_mrd_size(q, n, n - t), BoundKind::Lower, "lifted", {}};
}

BoundRecord bound_multiblock(unsigned q, unsigned n, unsigned t, unsigned s) {
  require_q(q);
  if (!(t < n && 2 * t >= n)) throw ParameterError("multiblock bound needs n/2 <= t < n");
  if (s < 1) throw ParameterError("multiblock bound needs s >= 1");
  const BigInt full = lifted_mrd_size(q, n, n - t);
  const BigInt restricted = restricted_block_size(q, n, t);
  // bound(0) = 1, bound(s) = full * bound(s-1) + restricted^s.
  BigInt value = 1;
  BigInt power = 1;
  for (unsigned j = 1; j <= s; ++j) {
    power *= restricted;
    value = value * full + power;
  }
  return {q, (s + 1) * n, 2 * (n - t), n, value, BoundKind::Lower, "multiblock", {}};
}

BoundRecord bound_johnson_halving(unsigned q, unsigned n, unsigned t) {
  require_q(q);
  if (!(t < n && 2 * t >= n)) throw ParameterError("johnson bound needs n/2 <= t < n");
  if (n < 2) throw ParameterError("johnson bound needs n >= 2");
  const BigInt numerator = bound_multiblock(q, n, t, 1).value;
  // Integer quantity, so the quotient is floored.
  const BigInt value = numerator / (ipow(q, n) + 1);
  return {q, 2 * n - 1, 2 * (n - t), n - 1, value, BoundKind::Lower, "johnson_halving", {}};
}

BoundRecord bound_parallel_linkage(unsigned q, unsigned k, unsigned h, unsigned d, const BigInt& input,
                                   const std::string& source) {
  require_q(q);
  if (d < 2 || d % 2 || d > k) throw ParameterError("parallel linkage bound needs even d with 2 <= d <= k");
  if (input <= 0) throw ParameterError("parallel linkage bound needs a positive input");
  const unsigned t = k - d / 2;
  const BigInt value = ipow(q, std::uint64_t{2 * k + h} * (t + 1)) + filtration_size(q, k, t, d / 2) * input;
  BoundRecord r{q, 3 * k + h, d, k, value, BoundKind::Lower, "parallel_linkage", {}};
  r.inputs.push_back({make_label(q, 2 * k + h, d, k), input, source});
  return r;
}

BoundRecord anticode_upper(unsigned q, unsigned n, unsigned delta, unsigned k) {
  require_q(q);
  if (!(1 <= delta && delta <= k && k <= n)) throw ParameterError("anticode bound needs 1 <= delta <= k <= n");
  const unsigned m = k - delta + 1;
  const BigInt value = gaussian_binomial(n, m, q) / gaussian_binomial(k, m, q);
  return {q, n, 2 * delta, k, value, BoundKind::Upper, "anticode", {}};
}

void BestKnownTable::add(BestKnownRow row) {
  if (row.value <= 0) throw FormatError("best-known value for " + make_label(row.q, row.n, row.d, row.k) + " must be positive");
  const BoundKey key{row.q, row.n, row.d, row.k};
  if (rows_.count(key)) throw FormatError("duplicate best-known key " + make_label(row.q, row.n, row.d, row.k));
  rows_.emplace(key, std::move(row));
}

const BestKnownRow* BestKnownTable::find(unsigned q, unsigned n, unsigned d, unsigned k) const {
  const auto it = rows_.find({q, n, d, k});
  return it == rows_.end() ? nullptr : &it->second;
}

std::vector<BestKnownRow> BestKnownTable::rows() const {
  std::vector<BestKnownRow> out;
  for (const auto& [key, row] : rows_) out.push_back(row);
  return out;
}

BestKnownTable load_best_known(std::istream& in) {
  BestKnownTable table;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (!header_seen) {
      const std::vector<std::string> expected{"q", "n", "d", "k", "value", "source"};
      if (cells != expected) throw FormatError("best-known header must be q,n,d,k,value,source");
      header_seen = true;
      continue;
    }
    if (cells.size() != 6) {
      throw FormatError("best-known line " + std::to_string(line_no) + ": expected 6 fields, got " +
                        std::to_string(cells.size()));
    }
    if (!all_digits(cells[4])) {
      throw FormatError("best-known line " + std::to_string(line_no) + ": bad value '" + cells[4] + "'");
    }
    table.add({parse_unsigned(cells[0], line_no), parse_unsigned(cells[1], line_no), parse_unsigned(cells[2], line_no),
               parse_unsigned(cells[3], line_no), BigInt(cells[4]), cells[5]});
  }
  if (!header_seen) throw FormatError("best-known table is empty");
  return table;
}

BestKnownTable load_best_known(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return load_best_known(in);
}

std::string default_best_known_path() { return std::string(CDC_DATA_DIR) + "/best_known.csv"; }

TableResult generate_table(int id) {
  TableResult result;
  result.id = id;
  switch (id) {
    case 2: {
      constexpr std::pair<unsigned, unsigned> grid[] = {{6, 3}, {7, 4}, {8, 4}, {8, 5}, {9, 5}, {9, 6}};
      for (const auto& [n, t] : grid)
        for (unsigned q : kTableQs) {
          if (n == 8 && t == 4 && q == 7) continue;  // not tabulated
          result.records.push_back(bound_multiblock(q, n, t, 1));
        }
      break;
    }
    case 3:
      for (unsigned q : kTableQs) result.records.push_back(bound_johnson_halving(q, 9, 6));
      break;
    case 4: {
      constexpr std::pair<unsigned, unsigned> grid[] = {{6, 3}, {6, 4}, {5, 3}};
      for (const auto& [n, t] : grid)
        for (unsigned q : kTableQs) result.records.push_back(bound_multiblock(q, n, t, 2));
      break;
    }
    case 5: {
      constexpr std::pair<unsigned, unsigned> grid[] = {{5, 3}, {6, 3}};
      for (const auto& [n, t] : grid)
        for (unsigned q : kTableQs) result.records.push_back(bound_multiblock(q, n, t, 3));
      break;
    }
    case 1:
      throw ParameterError("table 1 needs best-known inputs; use generate_table1");
    default:
      throw ParameterError("unknown table " + std::to_string(id));
  }
  require_anticode_consistent(result);
  return result;
}

TableResult generate_table1(const BestKnownTable& best_known) {
  struct Family {
    unsigned k, d, max_h;
  };
  constexpr Family families[] = {{5, 4, 4}, {6, 4, 1}, {6, 6, 1}};
  TableResult result;
  result.id = 1;
  for (const auto& f : families)
    for (unsigned h = 0; h <= f.max_h; ++h)
      for (unsigned q : kTableQs) {
        const unsigned input_n = 2 * f.k + h;
        if (const auto* row = best_known.find(q, input_n, f.d, f.k)) {
          result.records.push_back(bound_parallel_linkage(q, f.k, h, f.d, row->value, row->source));
        } else {
          result.skipped.push_back(
              {q, 3 * f.k + h, f.d, f.k, "no best-known value for " + make_label(q, input_n, f.d, f.k)});
        }
      }
  require_anticode_consistent(result);
  return result;
}

const char* to_string(Standing s) {
  switch (s) {
    case Standing::Improvement: return "improvement";
    case Standing::Tie: return "tie";
    case Standing::Below: return "below";
    case Standing::Absent: return "absent";
  }
  return "?";
}

std::vector<ComparisonEntry> compare(const std::vector<BoundRecord>& records, const BestKnownTable& table) {
  std::vector<ComparisonEntry> out;
  for (const auto& r : records) {
    ComparisonEntry e{{r.q, r.n, r.d, r.k}, r.value, std::nullopt, Standing::Absent};
    if (const auto* row = table.find(r.q, r.n, r.d, r.k)) {
      e.stored = row->value;
      e.standing = r.value > row->value ? Standing::Improvement
                   : r.value == row->value ? Standing::Tie
                                           : Standing::Below;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> anticode_violations(const std::vector<BoundRecord>& records) {
  std::vector<std::string> out;
  for (const auto& r : records) {
    if (r.kind != BoundKind::Lower || r.d % 2 || r.d < 2 || r.d / 2 > r.k || r.k > r.n) continue;
    const auto upper = anticode_upper(r.q, r.n, r.d / 2, r.k);
    if (r.value > upper.value) out.push_back(r.label() + " " + r.value.str() + " > " + upper.value.str());
  }
  return out;
}

std::string format_table(const TableResult& table, TableFormat format, const BestKnownTable* best_known) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"A_q(n,d,k)", "new", "old", "formula"});
  for (const auto& r : table.records) {
    std::string old;
    if (best_known)
      if (const auto* row = best_known->find(r.q, r.n, r.d, r.k)) old = row->value.str();
    rows.push_back({r.label(), r.value.str(), old, r.formula});
  }
  std::ostringstream out;
  if (format == TableFormat::Csv) {
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_quote(row[c]);
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << trim(line) << '\n';
  }
  for (const auto& s : table.skipped) out << "# skipped " << make_label(s.q, s.n, s.d, s.k) << ": " << s.reason << '\n';
  return out.str();
}

TableCheck check_table(const TableResult& table) {
  TableCheck check;
  const auto golden = golden_table(table.id);
  auto find_golden = [&](const BoundRecord& r) -> const GoldenRow* {
    for (const auto& g : golden)
      if (g.q == r.q && g.n == r.n && g.d == r.d && g.k == r.k) return &g;
    return nullptr;
  };
  for (const auto& r : table.records) {
    const GoldenRow* g = find_golden(r);
    if (!g) {
      check.mismatches.push_back(r.label() + ": no reference row");
      continue;
    }
    ++check.compared;
    if (parse_decimal_digits(g->value) != r.value) {
      check.mismatches.push_back(r.label() + ": computed " + r.value.str() + ", reference " + g->value);
    }
  }
  if (table.id != 1 && check.compared != golden.size()) {
    check.mismatches.push_back("compared " + std::to_string(check.compared) + " of " +
                               std::to_string(golden.size()) + " reference rows");
  }
  check.pass = check.mismatches.empty();
  return check;
}

}  // namespace cdc
