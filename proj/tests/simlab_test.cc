// Copyright 2026 The privnet-cpd Authors.
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

#include "privnet/simlab.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "gtest/gtest.h"
#include "privnet/toml_lite.h"

namespace privnet {
namespace {

namespace fs = std::filesystem;

absl::StatusOr<ExperimentConfig> FromText(const std::string& text) {
  auto doc = TomlDocument::Parse(text);
  if (!doc.ok()) return doc.status();
  return ExperimentConfigFromToml(*doc, "");
}

constexpr char kSmall[] = R"(seed = 3
[model]
n1 = 12
theta_pre = 0.1
theta_post = 0.4
[grid]
scenarios = ["none", "edge"]
delta = [6, 12]
alpha = [1.0]
repetitions = 5
)";

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path TempDir(const std::string& name) {
  fs::path dir = fs::path(testing::TempDir()) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(TauTest, DefaultRules) {
  const double l = std::log(100.0);
  EXPECT_NEAR(TauFor(TauRule::kPaperNone, 50, 50, 100),
              50 * std::pow(l, 1.5) / 10, 1e-12);
  EXPECT_NEAR(TauFor(TauRule::kPaperEdge, 50, 50, 100),
              50 * std::pow(l, 1.5) / 30, 1e-12);
  const double ln = std::log(2500.0 * 100.0);
  EXPECT_NEAR(TauFor(TauRule::kPaperNode, 50, 50, 100), 2500 * ln * ln / 10,
              1e-9);
  EXPECT_EQ(TauFor(TauRule::kFixed, 50, 50, 100, 7.5), 7.5);
  EXPECT_EQ(DefaultTau(Scenario::kNode).rule, TauRule::kPaperNode);
  EXPECT_EQ(*ParseTauRule("paper-edge"), TauRule::kPaperEdge);
  EXPECT_FALSE(ParseTauRule("paper").ok());
}

TEST(ConfigTest, ParsesDefaults) {
  auto config = FromText(kSmall);
  ASSERT_TRUE(config.ok()) << config.status();
  EXPECT_EQ(config->seed, 3u);
  EXPECT_EQ(config->model.n2, 12);
  EXPECT_EQ(config->repetitions, 5);
  EXPECT_FALSE(config->use_nbs);
  EXPECT_EQ(config->deltas.at(Scenario::kEdge), (std::vector<int64_t>{6, 12}));
  EXPECT_EQ(config->tau.at(Scenario::kEdge).rule, TauRule::kPaperEdge);
}

TEST(ConfigTest, ErrorsNameTheKey) {
  struct Case {
    std::string text;
    std::string key;
  };
  const std::string base = "[model]\nn1 = 4\ntheta_pre = 0.1\ntheta_post = 0.4\n";
  const Case cases[] = {
      {base + "[grid]\ndelta = [4]\nrepetitions = 0\nscenarios = [\"none\"]\n",
       "grid.repetitions"},
      {base + "[grid]\ndelta = []\nscenarios = [\"none\"]\n", "grid.none.delta"},
      {base + "[grid]\ndelta = [4]\nscenarios = [\"edge\"]\n", "grid.alpha"},
      {base + "[grid]\ndelta = [4]\nscenarios = [\"edge\"]\nalpha = [-1.0]\n",
       "grid.alpha"},
      {base + "[grid]\ndelta = [4]\nscenarios = [\"warp\"]\n", "grid.scenarios"},
      {base + "[grid]\ndelta = [4]\nscenarios = [\"none\"]\n[detector]\n"
              "method = \"wbs\"\n",
       "detector.method"},
      {base + "[grid]\ndelta = [4]\nscenarios = [\"none\"]\n[detector]\n"
              "tau.none = -2.0\n",
       "detector.tau.none"},
      {"[model]\nn1 = 4\nn2 = 5\ntheta_pre = 0.1\ntheta_post = 0.4\n"
       "[grid]\ndelta = [4]\nscenarios = [\"edge\"]\nalpha = [1.0]\n",
       "model.n2"},
      {"[model]\nn1 = 4\ntheta_pre = 1.5\ntheta_post = 0.4\n[grid]\n"
       "delta = [4]\n",
       "model.theta_pre"},
      {base + "[grid]\ndelta = [4]\nscenarios = [\"none\"]\nspeed = 3\n",
       "grid.speed"},
  };
  for (const Case& c : cases) {
    auto config = FromText(c.text);
    ASSERT_FALSE(config.ok()) << c.text;
    EXPECT_NE(config.status().message().find(c.key), absl::string_view::npos)
        << config.status() << " expected key " << c.key;
  }
}

TEST(CellSpecTest, HalfScaleLayout) {
  auto config = FromText(kSmall);
  ASSERT_TRUE(config.ok());
  auto spec = CellSpec(config->model, Scenario::kEdge, 7);
  ASSERT_TRUE(spec.ok());
  EXPECT_EQ(spec->horizon, 28);
  EXPECT_EQ(spec->change_points, std::vector<int64_t>{14});
  EXPECT_TRUE(spec->symmetric);
  auto node = CellSpec(config->model, Scenario::kNode, 7);
  ASSERT_TRUE(node.ok());
  EXPECT_FALSE(node->symmetric);
  EXPECT_FALSE(CellSpec(config->model, Scenario::kNone, 0).ok());
}

TEST(CellSpecTest, EqualMeansGiveNoChange) {
  auto config = FromText(kSmall);
  ASSERT_TRUE(config.ok());
  config->model.theta_post = config->model.theta_pre;
  auto spec = CellSpec(config->model, Scenario::kNone, 5);
  ASSERT_TRUE(spec.ok());
  EXPECT_TRUE(spec->change_points.empty());
}

TEST(CsvTest, RawRoundTrip) {
  std::vector<ResultRow> rows = {
      {Scenario::kNone, INFINITY, 7, 0, 0.0, 1, std::nullopt},
      {Scenario::kEdge, 0.1, 1280, 3, 0.123456789012345, 4, 12.5},
      {Scenario::kNode, 1.0 / 3.0, 2, 99, 1.0, 0, std::nullopt},
  };
  const std::string text = RawCsv(rows);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "scenario,alpha,delta,rep,scaled_error,k_hat,runtime_ms");
  auto parsed = ParseRawCsv(text);
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  EXPECT_EQ(*parsed, rows);
  EXPECT_FALSE(ParseRawCsv("a,b\n").ok());
}

TEST(RunExperimentTest, SingleCellOutputs) {
  auto config = FromText(kSmall);
  ASSERT_TRUE(config.ok());
  config->scenarios = {Scenario::kNone};
  config->deltas = {{Scenario::kNone, {8}}};
  config->output_dir = TempDir("single_cell").string();
  auto result = RunExperiment(*config, RunOptions{.threads = 1});
  ASSERT_TRUE(result.ok()) << result.status();
  EXPECT_EQ(result->rows.size(), 5u);
  ASSERT_EQ(result->summary.size(), 1u);
  EXPECT_EQ(result->summary[0].completed, 5);
  auto written = EmitOutputs(*config, *result);
  ASSERT_TRUE(written.ok()) << written.status();
  const fs::path dir(config->output_dir);
  const std::string raw = ReadFile(dir / "raw.csv");
  EXPECT_EQ(std::count(raw.begin(), raw.end(), '\n'), 6);
  const std::string summary = ReadFile(dir / "summary.csv");
  EXPECT_EQ(std::count(summary.begin(), summary.end(), '\n'), 2);
  EXPECT_EQ(summary.substr(0, summary.find('\n')),
            "scenario,alpha,delta,median_scaled_error");
  const std::string svg = ReadFile(dir / "none.svg");
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  auto parsed = ParseRawCsv(raw);
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ(*parsed, result->rows);
  for (const ResultRow& row : result->rows) {
    EXPECT_GE(row.scaled_error, 0.0);
    EXPECT_LE(row.scaled_error, 1.0);
    EXPECT_FALSE(row.runtime_ms.has_value());
  }
}

TEST(RunExperimentTest, EmptyResultIsAnError) {
  auto config = FromText(kSmall);
  ASSERT_TRUE(config.ok());
  config->output_dir = TempDir("empty").string();
  EXPECT_FALSE(EmitOutputs(*config, ExperimentResult{}).ok());
  EXPECT_FALSE(fs::exists(fs::path(config->output_dir) / "raw.csv"));
  config->deltas[Scenario::kNone].clear();
  EXPECT_FALSE(RunExperiment(*config).ok());
}

TEST(RunExperimentTest, DeterministicAndThreadInvariant) {
  auto config = FromText(kSmall);
  ASSERT_TRUE(config.ok());
  auto a = RunExperiment(*config, RunOptions{.threads = 1});
  auto b = RunExperiment(*config, RunOptions{.threads = 1});
  auto c = RunExperiment(*config, RunOptions{.threads = 3});
  ASSERT_TRUE(a.ok() && b.ok() && c.ok());
  EXPECT_EQ(RawCsv(a->rows), RawCsv(b->rows));
  EXPECT_EQ(RawCsv(a->rows), RawCsv(c->rows));
  EXPECT_EQ(SummaryCsv(a->summary), SummaryCsv(c->summary));
  config->seed = 4;
  auto d = RunExperiment(*config, RunOptions{.threads = 1});
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(d->rows.size(), a->rows.size());
}

TEST(RunExperimentTest, RepetitionIsReproducibleInIsolation) {
  auto config = FromText(kSmall);
  ASSERT_TRUE(config.ok());
  auto all = RunExperiment(*config, RunOptions{.threads = 1});
  ASSERT_TRUE(all.ok());
  const ResultRow& target = all->rows[7];
  auto alone = RunRepetition(
      *config, CellKey{target.scenario, target.alpha, target.delta},
      target.rep);
  ASSERT_TRUE(alone.ok());
  EXPECT_EQ(*alone, target);
}

TEST(RunExperimentTest, AbortsCellAfterThreeFailures) {
  auto config = FromText(kSmall);
  ASSERT_TRUE(config.ok());
  config->scenarios = {Scenario::kNone};
  config->deltas = {{Scenario::kNone, {6, 12}}};
  RunOptions options;
  options.threads = 1;
  int calls = 0;
  options.fault = [&calls](const CellKey& cell, int64_t) {
    if (cell.delta != 6) return absl::OkStatus();
    ++calls;
    return absl::InternalError("injected");
  };
  auto result = RunExperiment(*config, options);
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(calls, 3);
  ASSERT_EQ(result->summary.size(), 2u);
  EXPECT_EQ(result->summary[0].completed, 0);
  EXPECT_TRUE(std::isnan(result->summary[0].median));
  EXPECT_EQ(result->summary[1].completed, 5);
  ASSERT_FALSE(result->failures.empty());
  EXPECT_NE(result->failures[0].find("delta=6"), std::string::npos)
      << result->failures[0];
}

TEST(RunExperimentTest, NoSignalGivesUnitError) {
  auto config = FromText(kSmall);
  ASSERT_TRUE(config.ok());
  config->model.theta_post = config->model.theta_pre;
  config->scenarios = {Scenario::kNone};
  config->deltas = {{Scenario::kNone, {10}}};
  config->tau[Scenario::kNone] = {TauRule::kFixed, 1e6};
  auto result = RunExperiment(*config, RunOptions{.threads = 1});
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result->summary[0].median, 1.0);
}

TEST(RunExperimentTest, NbsOptionRuns) {
  auto config = FromText(kSmall);
  ASSERT_TRUE(config.ok());
  config->use_nbs = true;
  config->num_intervals = 20;
  config->cap_factor = 1.5;
  config->scenarios = {Scenario::kNone};
  config->deltas = {{Scenario::kNone, {10}}};
  auto result = RunExperiment(*config, RunOptions{.threads = 1});
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result->rows.size(), 5u);
}

TEST(FormatNumberTest, Shortest) {
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(FormatNumber(INFINITY), "inf");
  EXPECT_EQ(FormatNumber(NAN), "NA");
  EXPECT_EQ(FormatNumber(1280), "1280");
}

}  // namespace
}  // namespace privnet
