// Copyright 2026 The Authors.
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

#include "cli/commands.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "muc/instance_io.h"
#include "muc/setsys.h"

namespace muc::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun Muc(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun run;
  run.code = RunCli(args, out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

using Row = std::map<std::string, std::string>;

std::vector<std::string> Split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) cells.push_back(cell);
  if (!line.empty() && line.back() == sep) cells.emplace_back();
  return cells;
}

std::vector<Row> ParseTable(const std::string& text, char sep = ',') {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto cells = Split(line, sep);
    if (header.empty()) {
      header = cells;
      continue;
    }
    Row row;
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) {
      row[header[i]] = cells[i];
    }
    rows.push_back(row);
  }
  return rows;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(MUC_TEST_TMPDIR) /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

constexpr char kThreeSets[] = "5 3 2\n1 2 3\n3 4\n4 5\n";

TEST_F(CliTest, SolveExactAndHeuristics) {
  const std::string path = Write("three.txt", kThreeSets);
  for (const char* algo : {"exact", "ug", "ugf", "ugs", "best", "kernel"}) {
    const CliRun run = Muc({"solve", algo, path});
    ASSERT_EQ(run.code, kExitOk) << algo << ": " << run.err;
    const auto rows = ParseTable(run.out);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].at("unique_coverage"), "5") << algo;
    EXPECT_EQ(rows[0].at("algorithm"), algo);
  }
  const CliRun exact = Muc({"solve", "exact", path});
  EXPECT_EQ(ParseTable(exact.out)[0].at("solution_ids"), "0 2");
}

TEST_F(CliTest, SolveUgOnDisjointSetsKeepsEverything) {
  const std::string path = Write("disjoint.txt", "6 3 3\n1 2\n3 4\n5 6\n");
  const CliRun run = Muc({"solve", "ug", path, "--oracle"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const auto row = ParseTable(run.out).at(0);
  EXPECT_EQ(row.at("unique_coverage"), "6");
  EXPECT_EQ(row.at("bound_satisfied"), "true");
  EXPECT_EQ(row.at("oracle_value"), "6");
}

TEST_F(CliTest, KernelMatchesExactOnRandomInstances) {
  for (int seed = 1; seed <= 5; ++seed) {
    const std::string path = Path("r" + std::to_string(seed) + ".txt");
    ASSERT_EQ(Muc({"--seed", std::to_string(seed), "--out", path,
                   "gen-random", "--n", "12", "--m", "8", "--k", "2",
                   "--r-max", "2"})
                  .code,
              kExitOk);
    const CliRun kernel = Muc({"solve", "kernel", path, "--eps", "0.3",
                            "--oracle"});
    ASSERT_EQ(kernel.code, kExitOk) << kernel.err;
    const auto row = ParseTable(kernel.out).at(0);
    EXPECT_EQ(row.at("bound_satisfied"), "true");
    const CliRun exact = Muc({"solve", "exact", path});
    const double opt = std::stod(ParseTable(exact.out).at(0).at(
        "unique_coverage"));
    EXPECT_GE(std::stod(row.at("unique_coverage")), 0.7 * opt - 1e-9);
  }
}

TEST_F(CliTest, GenRandomIsDeterministicAndRespectsCaps) {
  const CliRun a = Muc({"--seed", "9", "gen-random", "--n", "15", "--m", "7"});
  const CliRun b = Muc({"--seed", "9", "gen-random", "--n", "15", "--m", "7"});
  const CliRun c = Muc({"--seed", "10", "gen-random", "--n", "15", "--m", "7"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);

  const CliRun capped = Muc({"gen-random", "--n", "10", "--m", "5", "--r-max",
                          "1", "--d-max", "1"});
  ASSERT_EQ(capped.code, kExitOk) << capped.err;
  const SetSystem sys = ParseInstanceString(capped.out);
  EXPECT_EQ(sys.num_sets(), 5u);
  const SubCollection all = SubCollection::All(sys);
  EXPECT_LE(MaxFrequency(all), 1u);
  EXPECT_LE(MaxSetSize(all), 1u);

  EXPECT_EQ(Muc({"gen-random", "--n", "2", "--m", "5", "--r-max", "1"}).code,
            kExitInput);
}

TEST_F(CliTest, InputErrorsMapToExitTwo) {
  const std::string bad = Write("bad.txt", "3 2 1\n1 2\n4\n");
  const CliRun run = Muc({"solve", "exact", bad});
  EXPECT_EQ(run.code, kExitInput);
  EXPECT_NE(run.err.find("line 3"), std::string::npos) << run.err;
  EXPECT_EQ(Muc({"solve", "exact", Path("missing.txt")}).code, kExitInput);
  EXPECT_EQ(Muc({"solve", "nonsense", bad}).code, kExitInput);
  EXPECT_EQ(Muc({}).code, kExitInput);
  EXPECT_EQ(Muc({"--format", "xml", "solve", "exact", bad}).code, kExitInput);
}

TEST_F(CliTest, OracleBudgetMapsToExitThree) {
  const std::string path = Path("big.txt");
  ASSERT_EQ(Muc({"--out", path, "gen-random", "--n", "40", "--m", "30",
                 "--k", "6"})
                .code,
            kExitOk);
  const CliRun run = Muc({"--oracle-budget", "100", "solve", "exact", path});
  EXPECT_EQ(run.code, kExitCapacity);
  EXPECT_FALSE(run.err.empty());
}

TEST_F(CliTest, TsvFormat) {
  const std::string path = Write("three.txt", kThreeSets);
  const CliRun run = Muc({"--format", "tsv", "solve", "ug", path});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const auto rows = ParseTable(run.out, '\t');
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].at("unique_coverage"), "5");
}

TEST_F(CliTest, GenHardWritesMetadataAndParses) {
  const CliRun run = Muc({"--seed", "4", "gen-hard", "--k", "3", "--a", "2",
                       "--m", "12", "--answer", "yes"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_NE(run.out.find("# hard 3 2 12 yes "), std::string::npos) << run.out;
  const SetSystem sys = ParseInstanceString(run.out);
  EXPECT_EQ(sys.universe_size(), 24u);
  EXPECT_EQ(sys.k(), 3u);
  EXPECT_EQ(Muc({"gen-hard", "--k", "3", "--m", "11"}).code, kExitInput);
}

TEST_F(CliTest, VerifyHardReportsIdenticalValue) {
  const CliRun run = Muc({"verify-hard", "--k", "3", "--a", "2", "--m", "6",
                       "--trials", "10"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  bool found = false;
  for (const auto& row : ParseTable(run.out)) {
    for (const auto& [column, value] : row) {
      if (value == "identical_family") found = true;
    }
  }
  EXPECT_TRUE(found) << run.out;
  EXPECT_NE(run.out.find("15"), std::string::npos);
}

TEST_F(CliTest, StreamPipelineAndTopSets) {
  const std::string path = Write("three.txt", kThreeSets);
  const CliRun pipeline = Muc({"stream", path, "--algo", "pipeline",
                            "--no-subsample", "--oracle"});
  ASSERT_EQ(pipeline.code, kExitOk) << pipeline.err;
  bool selected = false;
  for (const auto& row : ParseTable(pipeline.out)) {
    if (row.at("selected") == "true") {
      selected = true;
      EXPECT_EQ(row.at("full_value"), "5");
    }
  }
  EXPECT_TRUE(selected);

  const CliRun topsets = Muc({"stream", path, "--algo", "topsets",
                           "--no-subsample", "--r-bound", "2"});
  ASSERT_EQ(topsets.code, kExitOk) << topsets.err;
  EXPECT_EQ(Muc({"stream", path, "--algo", "topsets"}).code, kExitInput);
}

TEST_F(CliTest, ExperimentWritesReportAndSvg) {
  const std::string csv = Path("exp.csv");
  const std::string svg = Path("exp.svg");
  const CliRun run = Muc({"--seed", "3", "--out", csv, "experiment", "--suite",
                       "ug,ugf,kernel", "--trials", "4", "--n", "12", "--m",
                       "6", "--threads", "2", "--svg", svg});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const std::string text = Slurp(csv);
  EXPECT_EQ(text.rfind("# muc experiment seed=3", 0), 0u) << text;
  const auto rows = ParseTable(text);
  EXPECT_FALSE(rows.empty());
  for (const auto& row : rows) EXPECT_EQ(row.at("bound_satisfied"), "true");
  EXPECT_NE(Slurp(svg).find("<svg"), std::string::npos);

  const CliRun again = Muc({"--seed", "3", "experiment", "--suite",
                         "ug,ugf,kernel", "--trials", "4", "--n", "12", "--m",
                         "6", "--threads", "1"});
  const auto rows2 = ParseTable(again.out);
  ASSERT_EQ(rows.size(), rows2.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].at("value"), rows2[i].at("value"));
    EXPECT_EQ(rows[i].at("seed"), rows2[i].at("seed"));
  }
}

}  // namespace
}  // namespace muc::cli
