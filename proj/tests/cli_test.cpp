// Copyright 2026 The nbwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nbwalk/cli.hpp"
#include "support.hpp"

namespace {

using testing_support::fixture_path;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const nbwalk::cli::Hooks& hooks = {}) {
  args.insert(args.begin(), "nbwalk");
  std::ostringstream out, err;
  Result r;
  r.code = nbwalk::cli::run(args, out, err, hooks);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(CliInfo, DiamondSummary) {
  const Result r = invoke({"info", fixture_path("diamond")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0], (std::vector<std::string>{"key", "value"}));
  auto value = [&rows](const std::string& key) {
    for (const auto& row : rows)
      if (row.size() == 2 && row[0] == key) return row[1];
    return std::string("<missing>");
  };
  EXPECT_EQ(value("vertices"), "4");
  EXPECT_EQ(value("edges"), "5");
  EXPECT_EQ(value("profile"), "General");
  EXPECT_EQ(value("irreducible"), "true");
  EXPECT_EQ(value("aperiodic"), "true");
  EXPECT_NE(r.err.find("n=4 m=5"), std::string::npos);
}

TEST(CliInfo, BowtieIsPeriodic) {
  const Result r = invoke({"info", fixture_path("bowtie")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("period,3\n"), std::string::npos);
  EXPECT_NE(r.out.find("aperiodic,false\n"), std::string::npos);
}

TEST(CliSpectrum, BothMethodsMatchOnK4) {
  const Result r = invoke({"spectrum", "--method", "both", fixture_path("k4")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"re", "im", "multiplicity", "source"}));
  std::size_t closed = 0, dense = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::size_t k = std::stoul(rows[i][2]);
    (rows[i][3] == "closed-form" ? closed : dense) += k;
  }
  EXPECT_EQ(closed, 12u);
  EXPECT_EQ(dense, 12u);
  EXPECT_NE(r.err.find("(match)"), std::string::npos);
}

TEST(CliSpectrum, ClosedFormOnAGeneralGraphIsAnInputError) {
  EXPECT_EQ(invoke({"spectrum", "--method", "closed-form", fixture_path("diamond")}).code, 1);
  EXPECT_EQ(invoke({"spectrum", "--method", "bogus", fixture_path("k4")}).code, 1);
  EXPECT_EQ(invoke({"spectrum", fixture_path("diamond")}).code, 0);
}

TEST(CliIhara, UnitWeightsOnBowtie) {
  const Result r = invoke({"ihara-check", "--weights", "unit", fixture_path("bowtie")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"identity", "u", "lhs", "rhs", "residual"}));
  ASSERT_EQ(rows.size(), 1u + 2u * 21u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(std::stod(rows[i][4]), 1e-9);
}

TEST(CliIhara, CustomGridAndWeightFile) {
  const auto path = std::filesystem::temp_directory_path() / "nbwalk_cli_weights.txt";
  {
    std::ofstream w(path);
    w << "0 0.5\n3 2.0\n";
  }
  const Result r = invoke({"ihara-check", "--weights", path.string(), "--u-grid", "-0.3:0.3:7",
                           fixture_path("diamond")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_csv(r.out).size(), 1u + 14u);
  std::filesystem::remove(path);
}

TEST(CliIhara, CorruptedOperatorGivesExitTwo) {
  nbwalk::cli::Hooks hooks;
  hooks.mutate_operators = [](nbwalk::EdgeOperatorSet& ops) { ops.p_tilde(1, 4) += 0.5; };
  const Result r = invoke({"ihara-check", "--weights", "degree", fixture_path("diamond")}, hooks);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("FAIL"), std::string::npos);
}

TEST(CliIhara, ToleranceOverrideCanForceFailure) {
  // A threshold below machine precision cannot be met.
  const Result r = invoke({"ihara-check", "--tol", "1e-30", fixture_path("petersen")});
  EXPECT_EQ(r.code, 2);
}

TEST(CliDecomposition, PassesOnPetersen) {
  const Result r = invoke({"decomp-check", "--weights", "degree", fixture_path("petersen")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 6u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i].back(), "true");
}

TEST(CliMix, SeriesLength) {
  const Result r = invoke({"mix", "--steps", "40", fixture_path("diamond")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 41u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "chi_squared", "max_norm", "rate_estimate"}));
  EXPECT_EQ(rows[1][0], "1");
  EXPECT_EQ(rows[1][1], "3");
  EXPECT_EQ(invoke({"mix", "--vertex-starts", "--steps", "5", fixture_path("diamond")}).code, 0);
}

TEST(CliSimulate, ComparesAgainstTheExactKernel) {
  const Result r = invoke({"simulate", "--steps", "6", "--walkers", "20000", "--seed", "3",
                           "--start", "0", fixture_path("diamond")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"vertex", "label", "monte_carlo", "exact", "deviation"}));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(std::stod(rows[i][4]), 0.02);
  const Result threaded = invoke({"simulate", "--steps", "6", "--walkers", "20000", "--seed", "3",
                                  "--start", "0", "--threads", "3", fixture_path("diamond")});
  EXPECT_EQ(threaded.out, r.out);
}

TEST(CliLaplacian, CompareOutput) {
  const Result r = invoke({"laplacian-compare", fixture_path("diamond")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"lambda1_L", "lambda1_L_tilde", "chung_bound", "inequality_ok"}));
  EXPECT_EQ(rows[1][0], "1");
  EXPECT_EQ(rows[1][3], "true");
}

TEST(CliOutput, OutFlagWritesTheSameBytes) {
  const auto path = std::filesystem::temp_directory_path() / "nbwalk_cli_out.csv";
  const Result to_stdout = invoke({"spectrum", fixture_path("petersen")});
  const Result to_file = invoke({"spectrum", "--out", path.string(), fixture_path("petersen")});
  ASSERT_EQ(to_file.code, 0);
  EXPECT_TRUE(to_file.out.empty());
  EXPECT_EQ(read_file(path), to_stdout.out);
  std::filesystem::remove(path);
}

TEST(CliErrors, InputAndUsageErrorsExitOne) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"frobnicate", fixture_path("k4")}).code, 1);
  EXPECT_EQ(invoke({"info"}).code, 1);
  EXPECT_EQ(invoke({"info", "/nonexistent.edges"}).code, 1);
  EXPECT_EQ(invoke({"ihara-check", "--u-grid", "0.5", fixture_path("k4")}).code, 1);
  EXPECT_EQ(invoke({"ihara-check", "--u-grid", "a:b:3", fixture_path("k4")}).code, 1);
  EXPECT_EQ(invoke({"ihara-check", "--weights", "/nonexistent", fixture_path("k4")}).code, 1);
  EXPECT_EQ(invoke({"ihara-check", "--tol", "-1", fixture_path("k4")}).code, 1);
  EXPECT_EQ(invoke({"simulate", "--start", "nope", fixture_path("k4")}).code, 1);
  EXPECT_EQ(invoke({"simulate", "--walkers", "0", fixture_path("k4")}).code, 1);
  const Result usage = invoke({"frobnicate"});
  EXPECT_NE(usage.err.find("usage: nbwalk"), std::string::npos);
}

TEST(CliErrors, MalformedGraphFile) {
  const auto path = std::filesystem::temp_directory_path() / "nbwalk_bad.edges";
  {
    std::ofstream f(path);
    f << "0 1\n1 2\n2 3\n";
  }
  const Result r = invoke({"info", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("MinDegreeViolation"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(CliDeterminism, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"info", fixture_path("pendant-triangles")},
      {"ihara-check", "--weights", "degree", fixture_path("pendant-triangles")},
      {"decomp-check", fixture_path("pendant-triangles")},
      {"spectrum", fixture_path("pendant-triangles")},
      {"mix", "--steps", "30", fixture_path("pendant-triangles")},
      {"simulate", "--walkers", "3000", "--seed", "99", fixture_path("pendant-triangles")},
      {"laplacian-compare", fixture_path("pendant-triangles")}};
  for (const auto& command : commands) {
    const Result a = invoke(command);
    const Result b = invoke(command);
    EXPECT_EQ(a.code, 0) << command[0];
    EXPECT_EQ(a.out, b.out) << command[0];
    EXPECT_EQ(a.err, b.err) << command[0];
  }
}

}  // namespace
