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

#ifndef PRIVNET_SIMLAB_H_
#define PRIVNET_SIMLAB_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "privnet/model_spec.h"
#include "privnet/prob_matrix.h"
#include "privnet/toml_lite.h"

namespace privnet {

enum class Scenario { kNone, kEdge, kNode };

absl::string_view ScenarioName(Scenario scenario);
absl::StatusOr<Scenario> ParseScenario(absl::string_view name);

enum class TauRule { kPaperNone, kPaperEdge, kPaperNode, kFixed };

absl::string_view TauRuleName(TauRule rule);
absl::StatusOr<TauRule> ParseTauRule(absl::string_view name);

// Threshold for a detector input of `horizon` frames of n1 x n2 matrices,
// with natural logarithms:
//   paper-none: n (ln T)^1.5 / 10,  paper-edge: n (ln T)^1.5 / 30,
//   paper-node: n1 n2 (ln(n1 n2 T))^2 / 10,  where n = sqrt(n1 n2).
// kFixed returns `fixed`.
double TauFor(TauRule rule, int64_t n1, int64_t n2, int64_t horizon,
              double fixed = 0.0);

struct TauSetting {
  TauRule rule = TauRule::kPaperNone;
  double fixed = 0.0;
};

TauSetting DefaultTau(Scenario scenario);

// Balanced single-change template. The none and edge scenarios use the
// symmetric n1 x n1 form, the node scenario the bipartite n1 x n2 form.
struct ModelTemplate {
  int64_t n1 = 0;
  int64_t n2 = 0;
  Dependence dependence = Dependence::kIndependent;
  // Means before and after the change, as bipartite matrices.
  ProbMatrix theta_pre;
  ProbMatrix theta_post;
};

struct ExperimentConfig {
  ModelTemplate model;
  std::vector<Scenario> scenarios;
  // Delta grid per scenario.
  std::map<Scenario, std::vector<int64_t>> deltas;
  // Privacy budgets for the edge and node scenarios.
  std::vector<double> alphas;
  int64_t repetitions = 100;
  std::map<Scenario, TauSetting> tau;
  // Simplified binary segmentation unless set.
  bool use_nbs = false;
  int64_t num_intervals = 200;
  // Interval length cap C_R * Delta (half scale); unset means no cap.
  std::optional<double> cap_factor;
  uint64_t seed = 0;
  std::string output_dir = ".";
  std::string raw_csv = "raw.csv";
  std::string summary_csv = "summary.csv";
  bool plots = true;
  // Writes measured runtimes instead of NA.
  bool timings = false;
};

// Reads the [model], [grid], [detector] and [output] tables plus a top-level
// seed. Errors name the offending key path.
absl::StatusOr<ExperimentConfig> ExperimentConfigFromToml(
    const TomlDocument& doc, const std::string& base_dir);
absl::StatusOr<ExperimentConfig> LoadExperimentConfig(const std::string& path);
absl::Status ValidateExperimentConfig(const ExperimentConfig& config);

struct ResultRow {
  Scenario scenario = Scenario::kNone;
  // +inf for the none scenario.
  double alpha = 0.0;
  int64_t delta = 0;
  int64_t rep = 0;
  double scaled_error = 1.0;
  int64_t k_hat = 0;
  // Absent unless timings are enabled.
  std::optional<double> runtime_ms;

  bool operator==(const ResultRow&) const = default;
};

struct CellKey {
  Scenario scenario = Scenario::kNone;
  double alpha = 0.0;
  int64_t delta = 0;
};

struct SummaryRow {
  CellKey cell;
  // NaN when no repetition completed.
  double median = 0.0;
  int64_t completed = 0;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  std::vector<SummaryRow> summary;
  // One line per failed repetition or aborted cell.
  std::vector<std::string> failures;
};

struct RunOptions {
  // 0 uses every hardware thread.
  int64_t threads = 0;
  // Test hook consulted before each repetition.
  std::function<absl::Status(const CellKey&, int64_t rep)> fault;
};

// Instance of one repetition: the full simulated sequence has 4 Delta
// frames with the change after frame 2 Delta, so each even/odd half has
// T = 2 Delta frames and its change at half-scale time Delta. Scores use
// spacing Delta in half scale.
absl::StatusOr<ModelSpec> CellSpec(const ModelTemplate& model,
                                   Scenario scenario, int64_t delta);

// Runs one repetition and returns its row.
absl::StatusOr<ResultRow> RunRepetition(const ExperimentConfig& config,
                                        const CellKey& cell, int64_t rep);

// Seed of one repetition, a function of the master seed and the cell
// coordinates only.
uint64_t RepetitionSeed(uint64_t master, const CellKey& cell, int64_t rep);

// Runs the full grid. A cell stops after three consecutive failed
// repetitions.
absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config,
                                               const RunOptions& options = {});

// Worker count from PRIVNET_THREADS, or 0 when unset.
int64_t ThreadsFromEnvironment();

// Shortest round-trip decimal form; "inf" for infinity.
std::string FormatNumber(double value);

std::string RawCsv(const std::vector<ResultRow>& rows);
absl::StatusOr<std::vector<ResultRow>> ParseRawCsv(absl::string_view text);
std::string SummaryCsv(const std::vector<SummaryRow>& summary);

// Writes the raw and summary CSVs and, if enabled, one SVG per scenario into
// config.output_dir. Returns the written paths.
absl::StatusOr<std::vector<std::string>> EmitOutputs(
    const ExperimentConfig& config, const ExperimentResult& result);

}  // namespace privnet

#endif  // PRIVNET_SIMLAB_H_
