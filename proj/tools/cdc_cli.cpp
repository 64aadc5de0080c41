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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cdc/bounds.hpp"
#include "cdc/codeset_io.hpp"
#include "cdc/construct.hpp"
#include "cdc/verify.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct BoundArgs {
  std::string formula;
  unsigned q = 2, n = 0, t = 0, s = 1, k = 0, h = 0, d = 0, delta = 0;
  std::string input;
  std::string source = "user";
};

struct TableArgs {
  int id = 0;
  std::string best_known;
  std::string output;
  std::string format = "text";
  bool check = false;
};

struct ConstructArgs {
  std::string kind;
  unsigned q = 2, n = 0, t = 0, s = 1, k = 0, h = 0, d = 0, ambient = 0;
  std::string v_path;
  std::string output;
};

struct VerifyArgs {
  std::string path;
  std::string mode = "auto";
  std::uint64_t seed = 1;
  std::uint64_t pairs = 1'000'000;
  std::size_t cap = cdc::kDefaultExhaustiveCap;
  unsigned threads = 0;
};

void print_record(const cdc::BoundRecord& r) {
  std::cout << r.value.str() << ' ' << r.formula << ' ' << r.label() << '\n';
  for (const auto& in : r.inputs) std::cout << "input " << in.parameter << ' ' << in.value.str() << ' ' << in.source << '\n';
}

int run_bound(const BoundArgs& a) {
  using namespace cdc;
  if (a.formula == "multiblock") {
    print_record(bound_multiblock(a.q, a.n, a.t, a.s));
  } else if (a.formula == "johnson") {
    print_record(bound_johnson_halving(a.q, a.n, a.t));
  } else if (a.formula == "anticode") {
    print_record(anticode_upper(a.q, a.n, a.delta, a.k));
  } else if (a.formula == "lifted") {
    print_record(bound_lifted(a.q, a.n, a.t));
  } else {
    if (a.input.empty()) throw ParameterError("parallel-linkage needs --input");
    print_record(bound_parallel_linkage(a.q, a.k, a.h, a.d, parse_decimal_digits(a.input), a.source));
  }
  return kOk;
}

int run_table(const TableArgs& a) {
  using namespace cdc;
  std::optional<BestKnownTable> best;
  if (!a.best_known.empty()) {
    best = load_best_known(a.best_known);
  } else if (a.id == 1) {
    best = load_best_known(default_best_known_path());
  }
  const TableResult table = a.id == 1 ? generate_table1(*best) : generate_table(a.id);
  const std::string text =
      format_table(table, a.format == "csv" ? TableFormat::Csv : TableFormat::Text, best ? &*best : nullptr);
  if (a.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.output, std::ios::binary);
    if (!out || !(out << text)) throw FormatError("cannot write " + a.output);
  }
  if (!a.check) return kOk;
  const auto check = check_table(table);
  for (const auto& m : check.mismatches) std::cerr << "mismatch: " << m << '\n';
  std::cerr << "table " << a.id << ": " << check.compared << " rows compared, " << (check.pass ? "pass" : "FAIL")
            << '\n';
  return check.pass ? kOk : kCheckFailed;
}

int run_construct(const ConstructArgs& a) {
  using namespace cdc;
  const std::uint64_t budget = budget_from_env();
  auto build = [&]() -> CodeSet {
    if (a.kind == "lifted") return lifted_mrd_code(a.q, a.n, a.t, budget);
    if (a.kind == "lifted-rect") return lifted_rect_mrd_code(a.q, a.k, a.h, a.t, budget);
    if (a.kind == "multiblock") return multiblock_parallel_mrd(a.q, a.n, a.t, a.s, budget);
    if (a.kind == "grassmannian") return grassmannian(a.q, a.ambient, a.k, budget);
    const CodeSet v = a.v_path.empty() ? default_parallel_linkage_v(a.q, a.k, a.h, a.d, budget)
                                       : read_codeset(a.v_path).code;
    return parallel_linkage(a.q, a.k, a.h, a.d, v, budget);
  };
  const CodeSet code = build();
  if (a.output.empty() || a.output == "-") {
    write_codeset(std::cout, code);
  } else {
    write_codeset(a.output, code);
  }
  std::cerr << code.provenance().construction << ": " << code.size() << " subspaces of dimension " << code.k()
            << " in F_" << code.q() << "^" << code.ambient_dim() << ", claimed distance " << code.claimed_distance()
            << '\n';
  return kOk;
}

int run_verify(const VerifyArgs& a) {
  using namespace cdc;
  auto loaded = read_codeset(a.path);
  ValidateOptions opts;
  opts.exhaustive_cap = a.cap;
  opts.sampled = a.mode == "sampled";
  opts.sample_pairs = a.pairs;
  opts.seed = a.seed;
  opts.threads = a.threads;
  if (a.mode == "exhaustive" && loaded.code.size() > a.cap) {
    throw BudgetExceeded("exhaustive verification of " + std::to_string(loaded.code.size()) +
                         " members exceeds --cap " + std::to_string(a.cap));
  }
  Report report = validate_codeset(loaded.code, opts);
  report.checks.insert(report.checks.begin(), loaded.file_checks.begin(), loaded.file_checks.end());
  std::cout << report.to_json().dump(2) << '\n';
  return report.pass() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant dimension subspace codes: constructions, verification and bounds"};
  app.require_subcommand(1);

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a bound on A_q(n,d,k)");
  bound_cmd->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  bound_cmd->add_option("formula", bound.formula, "multiblock|johnson|anticode|parallel-linkage|lifted")
      ->required()
      ->check(CLI::IsMember({"multiblock", "johnson", "anticode", "parallel-linkage", "lifted"}));
  bound_cmd->add_option("--q", bound.q, "Field size");
  bound_cmd->add_option("--n", bound.n, "Block size n (ambient n for anticode)");
  bound_cmd->add_option("--t", bound.t, "q-degree bound t");
  bound_cmd->add_option("--s", bound.s, "Number of extra blocks s");
  bound_cmd->add_option("--k", bound.k, "Subspace dimension k");
  bound_cmd->add_option("--h", bound.h, "Extra columns h");
  bound_cmd->add_option("--d", bound.d, "Subspace distance d");
  bound_cmd->add_option("--delta", bound.delta, "Half distance for the anticode bound");
  bound_cmd->add_option("--input", bound.input, "Lower bound on A_q(2k+h,d,k)");
  bound_cmd->add_option("--source", bound.source, "Source tag recorded with --input");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Regenerate a bound table (1 to 5)");
  table_cmd->add_option("id", table.id)->required()->check(CLI::Range(1, 5));
  table_cmd->add_option("--best-known", table.best_known, "CSV with header q,n,d,k,value,source");
  table_cmd->add_option("-o,--output", table.output, "Output path (default stdout)");
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"csv", "text"}));
  table_cmd->add_flag("--check", table.check, "Compare against the reference rows");

  ConstructArgs cons;
  auto* cons_cmd = app.add_subcommand("construct", "Build a code and write it as JSON lines");
  cons_cmd->set_help_flag("--help", "Print this help message and exit");
  cons_cmd->add_option("kind", cons.kind)
      ->required()
      ->check(CLI::IsMember({"lifted", "lifted-rect", "multiblock", "parallel-linkage", "grassmannian"}));
  cons_cmd->add_option("--q", cons.q);
  cons_cmd->add_option("--n", cons.n);
  cons_cmd->add_option("--t", cons.t);
  cons_cmd->add_option("--s", cons.s);
  cons_cmd->add_option("--k", cons.k);
  cons_cmd->add_option("--h", cons.h);
  cons_cmd->add_option("--d", cons.d);
  cons_cmd->add_option("--N", cons.ambient, "Ambient dimension (grassmannian)");
  cons_cmd->add_option("--v", cons.v_path, "Code file used as V by parallel-linkage");
  cons_cmd->add_option("-o,--output", cons.output, "Output path (default stdout)");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check a code file and print a JSON report");
  ver_cmd->add_option("path", ver.path)->required();
  ver_cmd->add_option("--mode", ver.mode)->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  ver_cmd->add_option("--seed", ver.seed);
  ver_cmd->add_option("--pairs", ver.pairs)->check(CLI::PositiveNumber);
  ver_cmd->add_option("--cap", ver.cap, "Largest code checked exhaustively");
  ver_cmd->add_option("--threads", ver.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*bound_cmd) return run_bound(bound);
    if (*table_cmd) return run_table(table);
    if (*cons_cmd) return run_construct(cons);
    return run_verify(ver);
  } catch (const cdc::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const cdc::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kUsage;
  } catch (const cdc::FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kUsage;
  }
}
