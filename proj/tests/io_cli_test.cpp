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

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cdc/codeset_io.hpp"
#include "cdc/construct.hpp"

namespace cdc {
namespace {

namespace fs = std::filesystem;

std::string serialize(const CodeSet& code) {
  std::ostringstream out;
  write_codeset(out, code);
  return out.str();
}

LoadedCodeSet parse(const std::string& text) {
  std::istringstream in(text);
  return read_codeset(in);
}

TEST(CodeFileTest, RoundTrip) {
  for (const auto& code : {lifted_mrd_code(2, 2, 1), grassmannian(3, 3, 2), lifted_mrd_code(4, 2, 1)}) {
    const auto loaded = parse(serialize(code));
    EXPECT_EQ(std::vector<Subspace>(loaded.code.members().begin(), loaded.code.members().end()),
              std::vector<Subspace>(code.members().begin(), code.members().end()));
    EXPECT_EQ(loaded.code.provenance(), code.provenance());
    EXPECT_EQ(loaded.code.claimed_distance(), code.claimed_distance());
    EXPECT_EQ(&loaded.code.field(), &code.field());
    for (const auto& c : loaded.file_checks) EXPECT_TRUE(c.pass) << c.check;
  }
}

TEST(CodeFileTest, HeaderContract) {
  const std::string text = serialize(lifted_mrd_code(2, 2, 1));
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  const auto h = nlohmann::json::parse(header);
  for (const char* key : {"q", "p", "m", "moduli", "N", "k", "claimed_distance", "provenance", "count"})
    EXPECT_TRUE(h.contains(key)) << key;
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(h["count"], lines);
  EXPECT_EQ(h["count"], 16);
}

TEST(CodeFileTest, FileLevelChecks) {
  std::string text = serialize(lifted_mrd_code(2, 2, 1));
  // Drop the last member line: count mismatch.
  std::string shorter = text.substr(0, text.rfind('\n', text.size() - 2) + 1);
  auto loaded = parse(shorter);
  EXPECT_FALSE(loaded.file_checks[0].pass);
  // A row-equivalent but non-reduced line.
  auto with_extra = text + "[[1,1,0,0],[0,1,0,1]]\n";
  loaded = parse(with_extra);
  EXPECT_FALSE(loaded.file_checks[1].pass);
}

TEST(CodeFileTest, Malformed) {
  const std::string good = serialize(lifted_mrd_code(2, 2, 1));
  const std::string header = good.substr(0, good.find('\n') + 1);
  EXPECT_THROW(parse(""), FormatError);
  EXPECT_THROW(parse("not json\n"), FormatError);
  EXPECT_THROW(parse("{\"q\":2}\n"), FormatError);
  EXPECT_THROW(parse(header + "[[1,0,0]]\n"), FormatError);
  EXPECT_THROW(parse(header + "[[1,0,0,2],[0,1,0,0]]\n"), FormatError);
  EXPECT_THROW(parse(header + "[[1,0,0,0],\n"), FormatError);
  std::string other = good;
  other.replace(other.find("\"modulus\":[0,1]"), 15, "\"modulus\":[1,1]");
  EXPECT_THROW(parse(other), FormatError);
}

// Command-line contract, exercised through the built binary.
class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cdc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  struct Result {
    int code;
    std::string out;
  };

  Result run(const std::string& args) {
    const fs::path out = dir_ / "stdout.txt";
    const std::string cmd = std::string(CDC_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                            (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, Bounds) {
  EXPECT_EQ(run("bound multiblock --q 2 --n 6 --t 3 --s 2").out.substr(0, 16), "282957166112041 ");
  EXPECT_EQ(run("bound anticode --q 2 --n 4 --delta 1 --k 2").out.substr(0, 3), "35 ");
  EXPECT_EQ(run("bound johnson --q 2 --n 9 --t 6").out.substr(0, 18), "18073187439672244 ");
  EXPECT_EQ(run("bound lifted --q 2 --n 2 --t 1").out.substr(0, 3), "16 ");
  const auto pl = run("bound parallel-linkage --q 2 --k 6 --h 1 --d 6 --input 269057345");
  EXPECT_EQ(pl.code, 0);
  EXPECT_EQ(pl.out.substr(0, 17), "4527245732135821 ");
  EXPECT_EQ(run("bound multiblock --q 2 --n 6 --t 2 --s 1").code, 2);
  EXPECT_EQ(run("bound nonsense").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST_F(CliTest, Tables) {
  for (int id = 2; id <= 5; ++id) EXPECT_EQ(run("table " + std::to_string(id) + " --check").code, 0) << id;
  const auto t5 = run("table 5 --format csv");
  EXPECT_EQ(std::count(t5.out.begin(), t5.out.end(), '\n'), 15);
  const auto t1 = run("table 1 --best-known " + std::string(CDC_DATA_DIR) + "/best_known.csv --check");
  EXPECT_EQ(t1.code, 0);
  EXPECT_NE(t1.out.find("4527245732135821"), std::string::npos);
  EXPECT_NE(t1.out.find("# skipped"), std::string::npos);
  EXPECT_EQ(run("table 2 -o " + path("a.txt")).code, 0);
  EXPECT_EQ(run("table 2 -o " + path("b.txt")).code, 0);
  std::ifstream a(path("a.txt")), b(path("b.txt"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_FALSE(sa.str().empty());
  {
    std::ofstream bad(path("bad.csv"));
    bad << "q,n,d,k,value,source\n2,12,6,6,1,a\n2,12,6,6,2,b\n";
  }
  EXPECT_EQ(run("table 1 --best-known " + path("bad.csv")).code, 2);
}

TEST_F(CliTest, ConstructAndVerify) {
  EXPECT_EQ(run("construct lifted --q 2 --n 2 --t 1 -o " + path("l.jsonl")).code, 0);
  const auto loaded = read_codeset(path("l.jsonl"));
  EXPECT_EQ(loaded.code.size(), 16u);
  const auto v = run("verify " + path("l.jsonl") + " --mode exhaustive");
  EXPECT_EQ(v.code, 0);
  const auto report = nlohmann::json::parse(v.out);
  EXPECT_TRUE(report["pass"].get<bool>());

  // Corrupt a member line: the copy collapses onto another member.
  std::ifstream in(path("l.jsonl"));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  lines[2] = lines[1];
  std::ofstream out(path("bad.jsonl"));
  for (const auto& l : lines) out << l << '\n';
  out.close();
  EXPECT_EQ(run("verify " + path("bad.jsonl")).code, 1);

  const auto s1 = run("verify " + path("l.jsonl") + " --mode sampled --seed 9 --pairs 1000");
  const auto s2 = run("verify " + path("l.jsonl") + " --mode sampled --seed 9 --pairs 1000");
  EXPECT_EQ(s1.code, 0);
  EXPECT_EQ(s1.out, s2.out);

  EXPECT_EQ(run("verify " + path("l.jsonl") + " --mode exhaustive --cap 3").code, 3);
  EXPECT_EQ(run("verify " + path("missing.jsonl")).code, 2);
  {
    std::ofstream garbage(path("garbage.jsonl"));
    garbage << "{oops\n";
  }
  EXPECT_EQ(run("verify " + path("garbage.jsonl")).code, 2);
}

TEST_F(CliTest, BudgetExitCode) {
  EXPECT_EQ(run("construct multiblock --q 2 --n 6 --t 3 --s 1 -o " + path("x.jsonl")).code, 3);
  EXPECT_EQ(run("construct lifted --q 2 --n 2 --t 1 -o " + path("y.jsonl")).code, 0);
  EXPECT_EQ(std::system(("CDC_BUDGET=10 " + std::string(CDC_CLI_PATH) + " construct lifted --q 2 --n 2 --t 1 -o " +
                         path("z.jsonl") + " 2>/dev/null")
                            .c_str()) >> 8,
            3);
}

TEST_F(CliTest, ParallelLinkageWithSuppliedV) {
  EXPECT_EQ(run("construct grassmannian --q 2 --N 4 --k 2 -o " + path("v.jsonl")).code, 0);
  EXPECT_EQ(run("construct parallel-linkage --q 2 --k 2 --h 0 --d 2 --v " + path("v.jsonl") + " -o " + path("p.jsonl")).code, 0);
  EXPECT_EQ(read_codeset(path("p.jsonl")).code.size(), 571u);
  EXPECT_EQ(run("verify " + path("p.jsonl")).code, 0);
}

}  // namespace
}  // namespace cdc
