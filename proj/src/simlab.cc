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

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <thread>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "privnet/detector.h"
#include "privnet/edge_rr.h"
#include "privnet/metrics.h"
#include "privnet/node_mechanism.h"
#include "privnet/rng.h"
#include "privnet/sampling.h"
#include "privnet/spec_io.h"
#include "privnet/status_macros.h"
#include "privnet/svg_plot.h"

namespace privnet {
namespace {

namespace fs = std::filesystem;

constexpr Scenario kAllScenarios[] = {Scenario::kNone, Scenario::kEdge,
                                      Scenario::kNode};
constexpr int64_t kMaxConsecutiveFailures = 3;
constexpr char kRawHeader[] =
    "scenario,alpha,delta,rep,scaled_error,k_hat,runtime_ms";

absl::Status Prefixed(absl::string_view key, const absl::Status& status) {
  return absl::Status(status.code(), absl::StrCat(key, ": ", status.message()));
}

absl::Status KeyError(absl::string_view key, absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat(key, ": ", message));
}

absl::StatusOr<ProbMatrix> ReadTheta(const TomlDocument& doc,
                                     absl::string_view key, int64_t n1,
                                     int64_t n2, const std::string& base_dir) {
  const TomlValue* value = doc.Find(key);
  if (value == nullptr) return KeyError(key, "missing");
  absl::StatusOr<ProbMatrix> theta;
  if (const auto* path = std::get_if<std::string>(value)) {
    fs::path p(*path);
    if (p.is_relative() && !base_dir.empty()) p = fs::path(base_dir) / p;
    theta = ReadMatrixCsv(p.string(), false);
    if (theta.ok() && (theta->rows() != n1 || theta->cols() != n2)) {
      return KeyError(key, absl::StrFormat("matrix is %dx%d, expected %dx%d",
                                           theta->rows(), theta->cols(), n1,
                                           n2));
    }
  } else {
    PRIVNET_ASSIGN_OR_RETURN(double p, doc.GetDouble(key));
    theta = ProbMatrix::Constant(n1, n2, p, false);
  }
  if (!theta.ok()) return Prefixed(key, theta.status());
  return theta;
}

absl::StatusOr<TauSetting> ReadTau(const TomlDocument& doc,
                                   absl::string_view key) {
  const TomlValue* value = doc.Find(key);
  TauSetting tau;
  if (const auto* name = std::get_if<std::string>(value)) {
    auto rule = ParseTauRule(*name);
    if (!rule.ok()) return Prefixed(key, rule.status());
    if (*rule == TauRule::kFixed) {
      return KeyError(key, "give a fixed threshold as a number");
    }
    tau.rule = *rule;
    return tau;
  }
  PRIVNET_ASSIGN_OR_RETURN(tau.fixed, doc.GetDouble(key));
  tau.rule = TauRule::kFixed;
  if (!(tau.fixed > 0.0)) return KeyError(key, "threshold must be positive");
  return tau;
}

// Symmetric copy of a bipartite template matrix.
absl::StatusOr<ProbMatrix> AsSymmetric(const ProbMatrix& m) {
  std::vector<double> values(m.values().begin(), m.values().end());
  return ProbMatrix::Create(m.rows(), m.cols(), std::move(values), true);
}

double Median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

std::string CellName(const CellKey& cell) {
  return absl::StrFormat("scenario=%s alpha=%s delta=%d",
                         ScenarioName(cell.scenario), FormatNumber(cell.alpha),
                         cell.delta);
}

std::vector<CellKey> Cells(const ExperimentConfig& config) {
  std::vector<CellKey> cells;
  for (Scenario scenario : config.scenarios) {
    std::vector<double> alphas = config.alphas;
    if (scenario == Scenario::kNone) {
      alphas = {std::numeric_limits<double>::infinity()};
    }
    for (double alpha : alphas) {
      for (int64_t delta : config.deltas.at(scenario)) {
        cells.push_back({scenario, alpha, delta});
      }
    }
  }
  return cells;
}

absl::Status WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write '", path.string(), "'"));
  }
  out << text;
  out.close();
  if (!out) {
    return absl::DataLossError(
        absl::StrCat("write failed: '", path.string(), "'"));
  }
  return absl::OkStatus();
}

}  // namespace

absl::string_view ScenarioName(Scenario scenario) {
  switch (scenario) {
    case Scenario::kNone:
      return "none";
    case Scenario::kEdge:
      return "edge";
    case Scenario::kNode:
      return "node";
  }
  return "unknown";
}

absl::StatusOr<Scenario> ParseScenario(absl::string_view name) {
  for (Scenario s : kAllScenarios) {
    if (name == ScenarioName(s)) return s;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown scenario '", name, "' (expected none, edge or node)"));
}

absl::string_view TauRuleName(TauRule rule) {
  switch (rule) {
    case TauRule::kPaperNone:
      return "paper-none";
    case TauRule::kPaperEdge:
      return "paper-edge";
    case TauRule::kPaperNode:
      return "paper-node";
    case TauRule::kFixed:
      return "fixed";
  }
  return "unknown";
}

absl::StatusOr<TauRule> ParseTauRule(absl::string_view name) {
  for (TauRule r : {TauRule::kPaperNone, TauRule::kPaperEdge,
                    TauRule::kPaperNode, TauRule::kFixed}) {
    if (name == TauRuleName(r)) return r;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown tau rule '", name,
      "' (expected paper-none, paper-edge or paper-node)"));
}

double TauFor(TauRule rule, int64_t n1, int64_t n2, int64_t horizon,
              double fixed) {
  const double n = std::sqrt(static_cast<double>(n1) * static_cast<double>(n2));
  const double log_t = std::log(static_cast<double>(horizon));
  switch (rule) {
    case TauRule::kPaperNone:
      return n * std::pow(log_t, 1.5) / 10.0;
    case TauRule::kPaperEdge:
      return n * std::pow(log_t, 1.5) / 30.0;
    case TauRule::kPaperNode: {
      const double size = static_cast<double>(n1) * static_cast<double>(n2);
      const double l = std::log(size * static_cast<double>(horizon));
      return size * l * l / 10.0;
    }
    case TauRule::kFixed:
      return fixed;
  }
  return fixed;
}

TauSetting DefaultTau(Scenario scenario) {
  switch (scenario) {
    case Scenario::kNone:
      return {TauRule::kPaperNone, 0.0};
    case Scenario::kEdge:
      return {TauRule::kPaperEdge, 0.0};
    case Scenario::kNode:
      return {TauRule::kPaperNode, 0.0};
  }
  return {};
}

absl::StatusOr<ExperimentConfig> ExperimentConfigFromToml(
    const TomlDocument& doc, const std::string& base_dir) {
  PRIVNET_RETURN_IF_ERROR(doc.CheckKeys(
      {"seed", "model.n1", "model.n2", "model.dependence", "model.theta_pre",
       "model.theta_post", "grid.scenarios", "grid.delta", "grid.none.delta",
       "grid.edge.delta", "grid.node.delta", "grid.alpha", "grid.repetitions",
       "detector.method", "detector.intervals", "detector.cap",
       "detector.tau.none", "detector.tau.edge", "detector.tau.node",
       "output.dir", "output.raw", "output.summary", "output.plots",
       "output.timings"}));
  ExperimentConfig config;
  if (doc.Has("seed")) {
    PRIVNET_ASSIGN_OR_RETURN(int64_t seed, doc.GetInt("seed"));
    config.seed = static_cast<uint64_t>(seed);
  }

  ModelTemplate& model = config.model;
  PRIVNET_ASSIGN_OR_RETURN(model.n1, doc.GetInt("model.n1"));
  if (model.n1 < 1) return KeyError("model.n1", "must be positive");
  model.n2 = model.n1;
  if (doc.Has("model.n2")) {
    PRIVNET_ASSIGN_OR_RETURN(model.n2, doc.GetInt("model.n2"));
    if (model.n2 < 1) return KeyError("model.n2", "must be positive");
  }
  if (doc.Has("model.dependence")) {
    PRIVNET_ASSIGN_OR_RETURN(std::string name,
                             doc.GetString("model.dependence"));
    auto dependence = ParseDependence(name);
    if (!dependence.ok()) {
      return Prefixed("model.dependence", dependence.status());
    }
    model.dependence = *dependence;
  }
  PRIVNET_ASSIGN_OR_RETURN(
      model.theta_pre,
      ReadTheta(doc, "model.theta_pre", model.n1, model.n2, base_dir));
  PRIVNET_ASSIGN_OR_RETURN(
      model.theta_post,
      ReadTheta(doc, "model.theta_post", model.n1, model.n2, base_dir));

  if (doc.Has("grid.scenarios")) {
    PRIVNET_ASSIGN_OR_RETURN(std::vector<std::string> names,
                             doc.GetStringArray("grid.scenarios"));
    for (const std::string& name : names) {
      auto scenario = ParseScenario(name);
      if (!scenario.ok()) return Prefixed("grid.scenarios", scenario.status());
      config.scenarios.push_back(*scenario);
    }
  } else {
    config.scenarios = {std::begin(kAllScenarios), std::end(kAllScenarios)};
  }
  std::vector<int64_t> default_deltas;
  if (doc.Has("grid.delta")) {
    PRIVNET_ASSIGN_OR_RETURN(default_deltas, doc.GetIntArray("grid.delta"));
  }
  for (Scenario s : config.scenarios) {
    const std::string key = absl::StrCat("grid.", ScenarioName(s), ".delta");
    if (doc.Has(key)) {
      PRIVNET_ASSIGN_OR_RETURN(config.deltas[s], doc.GetIntArray(key));
    } else if (doc.Has("grid.delta")) {
      config.deltas[s] = default_deltas;
    } else {
      return KeyError("grid.delta", "missing");
    }
  }
  if (doc.Has("grid.alpha")) {
    PRIVNET_ASSIGN_OR_RETURN(config.alphas, doc.GetDoubleArray("grid.alpha"));
  }
  if (doc.Has("grid.repetitions")) {
    PRIVNET_ASSIGN_OR_RETURN(config.repetitions,
                             doc.GetInt("grid.repetitions"));
  }

  if (doc.Has("detector.method")) {
    PRIVNET_ASSIGN_OR_RETURN(std::string method,
                             doc.GetString("detector.method"));
    if (method == "nbs") {
      config.use_nbs = true;
    } else if (method != "bs") {
      return KeyError("detector.method", absl::StrCat("unknown method '",
                                                      method,
                                                      "' (expected bs or nbs)"));
    }
  }
  if (doc.Has("detector.intervals")) {
    PRIVNET_ASSIGN_OR_RETURN(config.num_intervals,
                             doc.GetInt("detector.intervals"));
  }
  if (doc.Has("detector.cap")) {
    PRIVNET_ASSIGN_OR_RETURN(config.cap_factor, doc.GetDouble("detector.cap"));
  }
  for (Scenario s : kAllScenarios) {
    const std::string key = absl::StrCat("detector.tau.", ScenarioName(s));
    if (doc.Has(key)) {
      PRIVNET_ASSIGN_OR_RETURN(config.tau[s], ReadTau(doc, key));
    } else {
      config.tau[s] = DefaultTau(s);
    }
  }

  if (doc.Has("output.dir")) {
    PRIVNET_ASSIGN_OR_RETURN(config.output_dir, doc.GetString("output.dir"));
    fs::path p(config.output_dir);
    if (p.is_relative() && !base_dir.empty()) {
      config.output_dir = (fs::path(base_dir) / p).string();
    }
  }
  if (doc.Has("output.raw")) {
    PRIVNET_ASSIGN_OR_RETURN(config.raw_csv, doc.GetString("output.raw"));
  }
  if (doc.Has("output.summary")) {
    PRIVNET_ASSIGN_OR_RETURN(config.summary_csv,
                             doc.GetString("output.summary"));
  }
  if (doc.Has("output.plots")) {
    PRIVNET_ASSIGN_OR_RETURN(config.plots, doc.GetBool("output.plots"));
  }
  if (doc.Has("output.timings")) {
    PRIVNET_ASSIGN_OR_RETURN(config.timings, doc.GetBool("output.timings"));
  }
  PRIVNET_RETURN_IF_ERROR(ValidateExperimentConfig(config));
  return config;
}

absl::StatusOr<ExperimentConfig> LoadExperimentConfig(const std::string& path) {
  PRIVNET_ASSIGN_OR_RETURN(TomlDocument doc, TomlDocument::Load(path));
  return ExperimentConfigFromToml(doc, fs::path(path).parent_path().string());
}

absl::Status ValidateExperimentConfig(const ExperimentConfig& config) {
  const ModelTemplate& model = config.model;
  if (model.n1 < 1) return KeyError("model.n1", "must be positive");
  if (model.n2 < 1) return KeyError("model.n2", "must be positive");
  for (const auto& [key, theta] :
       {std::pair<const char*, const ProbMatrix*>{"model.theta_pre",
                                                  &model.theta_pre},
        {"model.theta_post", &model.theta_post}}) {
    if (theta->rows() != model.n1 || theta->cols() != model.n2) {
      return KeyError(key, absl::StrFormat("matrix must be %dx%d", model.n1,
                                           model.n2));
    }
  }
  if (config.repetitions < 1) {
    return KeyError("grid.repetitions", "must be at least 1");
  }
  if (config.scenarios.empty()) {
    return KeyError("grid.scenarios", "must name at least one scenario");
  }
  std::set<Scenario> seen;
  bool private_scenario = false;
  for (Scenario s : config.scenarios) {
    if (!seen.insert(s).second) {
      return KeyError("grid.scenarios",
                      absl::StrCat("duplicate scenario ", ScenarioName(s)));
    }
    const std::string delta_key =
        absl::StrCat("grid.", ScenarioName(s), ".delta");
    auto it = config.deltas.find(s);
    if (it == config.deltas.end() || it->second.empty()) {
      return KeyError(delta_key, "Delta grid must be nonempty");
    }
    for (int64_t delta : it->second) {
      if (delta < 1) return KeyError(delta_key, "Delta must be positive");
    }
    if (s == Scenario::kNone || s == Scenario::kEdge) {
      if (model.n1 != model.n2) {
        return KeyError("model.n2", absl::StrCat("the ", ScenarioName(s),
                                                 " scenario needs a square "
                                                 "symmetric network"));
      }
      for (const auto& [key, theta] :
           {std::pair<const char*, const ProbMatrix*>{"model.theta_pre",
                                                      &model.theta_pre},
            {"model.theta_post", &model.theta_post}}) {
        if (!AsSymmetric(*theta).ok()) {
          return KeyError(key, absl::StrCat("the ", ScenarioName(s),
                                            " scenario needs a symmetric "
                                            "matrix"));
        }
      }
      if (model.dependence == Dependence::kIdenticalRows) {
        return KeyError("model.dependence",
                        "identical_rows is only valid for the node scenario");
      }
    }
    if (s != Scenario::kNone) private_scenario = true;
    const TauSetting tau = config.tau.count(s) ? config.tau.at(s)
                                               : DefaultTau(s);
    if (tau.rule == TauRule::kFixed && !(tau.fixed > 0.0)) {
      return KeyError(absl::StrCat("detector.tau.", ScenarioName(s)),
                      "threshold must be positive");
    }
  }
  if (private_scenario) {
    if (config.alphas.empty()) {
      return KeyError("grid.alpha", "alpha grid must be nonempty");
    }
    for (double alpha : config.alphas) {
      if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        return KeyError("grid.alpha", "alpha must be positive and finite");
      }
    }
  }
  if (config.use_nbs && config.num_intervals < 1) {
    return KeyError("detector.intervals", "must be at least 1");
  }
  if (config.cap_factor.has_value() && !(*config.cap_factor > 0.0)) {
    return KeyError("detector.cap", "must be positive");
  }
  return absl::OkStatus();
}

absl::StatusOr<ModelSpec> CellSpec(const ModelTemplate& model,
                                   Scenario scenario, int64_t delta) {
  if (delta < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Delta = %d must be positive", delta));
  }
  ModelSpec spec;
  spec.horizon = 4 * delta;
  spec.n1 = model.n1;
  spec.n2 = model.n2;
  spec.symmetric = scenario != Scenario::kNode;
  spec.dependence = model.dependence;
  ProbMatrix pre = model.theta_pre;
  ProbMatrix post = model.theta_post;
  if (spec.symmetric) {
    PRIVNET_ASSIGN_OR_RETURN(pre, AsSymmetric(model.theta_pre));
    PRIVNET_ASSIGN_OR_RETURN(post, AsSymmetric(model.theta_post));
  }
  if (FrobeniusDistance(pre, post) > 0.0) {
    spec.change_points = {2 * delta};
    spec.segment_thetas = {std::move(pre), std::move(post)};
  } else {
    spec.segment_thetas = {std::move(pre)};
  }
  PRIVNET_RETURN_IF_ERROR(ValidateSpec(spec).status());
  return spec;
}

uint64_t RepetitionSeed(uint64_t master, const CellKey& cell, int64_t rep) {
  return DeriveSeed(master, "rep",
                    {static_cast<uint64_t>(cell.scenario),
                     std::bit_cast<uint64_t>(cell.alpha),
                     static_cast<uint64_t>(cell.delta),
                     static_cast<uint64_t>(rep)});
}

absl::StatusOr<ResultRow> RunRepetition(const ExperimentConfig& config,
                                        const CellKey& cell, int64_t rep) {
  const auto start = std::chrono::steady_clock::now();
  const uint64_t seed = RepetitionSeed(config.seed, cell, rep);
  PRIVNET_ASSIGN_OR_RETURN(ModelSpec spec,
                           CellSpec(config.model, cell.scenario, cell.delta));
  PRIVNET_ASSIGN_OR_RETURN(NetworkSequence seq, SampleSequence(spec, seed));
  switch (cell.scenario) {
    case Scenario::kNone:
      break;
    case Scenario::kEdge: {
      PRIVNET_ASSIGN_OR_RETURN(seq, RRPrivatize(seq, cell.alpha, seed));
      break;
    }
    case Scenario::kNode: {
      PRIVNET_ASSIGN_OR_RETURN(seq, NodePrivatize(seq, cell.alpha, seed));
      break;
    }
  }
  PRIVNET_ASSIGN_OR_RETURN(auto halves, SplitEvenOdd(seq));
  const int64_t half_t = halves.odd.length();
  const TauSetting tau_setting = config.tau.count(cell.scenario)
                                     ? config.tau.at(cell.scenario)
                                     : DefaultTau(cell.scenario);
  DetectorConfig detector;
  detector.tau = TauFor(tau_setting.rule, spec.n1, spec.n2, half_t,
                        tau_setting.fixed);
  Estimate estimate;
  if (config.use_nbs) {
    std::optional<double> cap;
    if (config.cap_factor.has_value()) {
      cap = std::max(2.0, *config.cap_factor * static_cast<double>(cell.delta));
    }
    PRIVNET_ASSIGN_OR_RETURN(
        std::vector<Interval> intervals,
        GenRandomIntervals(half_t, config.num_intervals, cap,
                           DeriveSeed(seed, "intervals")));
    PRIVNET_ASSIGN_OR_RETURN(
        estimate, NbsDetect(halves.odd, halves.even, intervals, detector));
  } else {
    PRIVNET_ASSIGN_OR_RETURN(estimate,
                             BsDetect(halves.odd, halves.even, detector));
  }
  const std::vector<int64_t> found = estimate.Locations();
  const std::vector<int64_t> truth = {cell.delta};
  const double spacing = static_cast<double>(cell.delta);

  ResultRow row;
  row.scenario = cell.scenario;
  row.alpha = cell.alpha;
  row.delta = cell.delta;
  row.rep = rep;
  row.scaled_error = ScaledError(found, truth, spacing);
  row.k_hat = static_cast<int64_t>(found.size());
  if (config.timings) {
    row.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return row;
}

absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config,
                                               const RunOptions& options) {
  PRIVNET_RETURN_IF_ERROR(ValidateExperimentConfig(config));
  const std::vector<CellKey> cells = Cells(config);

  struct CellOutcome {
    std::vector<ResultRow> rows;
    std::vector<std::string> failures;
  };
  std::vector<CellOutcome> outcomes(cells.size());
  const auto run_cell = [&](size_t index) {
    const CellKey& cell = cells[index];
    CellOutcome& outcome = outcomes[index];
    int64_t consecutive = 0;
    for (int64_t rep = 0; rep < config.repetitions; ++rep) {
      absl::Status status =
          options.fault ? options.fault(cell, rep) : absl::OkStatus();
      absl::StatusOr<ResultRow> row =
          status.ok() ? RunRepetition(config, cell, rep)
                      : absl::StatusOr<ResultRow>(status);
      if (row.ok()) {
        outcome.rows.push_back(*std::move(row));
        consecutive = 0;
        continue;
      }
      outcome.failures.push_back(absl::StrFormat(
          "%s rep=%d: %s", CellName(cell), rep, row.status().message()));
      if (++consecutive >= kMaxConsecutiveFailures) {
        outcome.failures.push_back(absl::StrFormat(
            "%s: aborted after %d consecutive failures", CellName(cell),
            kMaxConsecutiveFailures));
        break;
      }
    }
  };

  int64_t threads = options.threads;
  if (threads <= 0) {
    threads = std::max<int64_t>(1, std::thread::hardware_concurrency());
  }
  threads = std::min<int64_t>(threads, static_cast<int64_t>(cells.size()));
  if (threads <= 1) {
    for (size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    for (int64_t w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (size_t i = next++; i < cells.size(); i = next++) run_cell(i);
      });
    }
    for (std::thread& worker : workers) worker.join();
  }

  ExperimentResult result;
  for (size_t i = 0; i < cells.size(); ++i) {
    std::vector<double> errors;
    for (const ResultRow& row : outcomes[i].rows) {
      errors.push_back(row.scaled_error);
      result.rows.push_back(row);
    }
    result.summary.push_back(
        {cells[i], Median(errors), static_cast<int64_t>(errors.size())});
    for (std::string& failure : outcomes[i].failures) {
      result.failures.push_back(std::move(failure));
    }
  }
  return result;
}

int64_t ThreadsFromEnvironment() {
  const char* value = std::getenv("PRIVNET_THREADS");
  int64_t threads = 0;
  if (value == nullptr || !absl::SimpleAtoi(value, &threads) || threads < 0) {
    return 0;
  }
  return threads;
}

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "NA";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

std::string RawCsv(const std::vector<ResultRow>& rows) {
  std::string out = absl::StrCat(kRawHeader, "\n");
  for (const ResultRow& row : rows) {
    absl::StrAppend(&out, ScenarioName(row.scenario), ",",
                    FormatNumber(row.alpha), ",", row.delta, ",", row.rep,
                    ",", FormatNumber(row.scaled_error), ",", row.k_hat, ",",
                    row.runtime_ms ? FormatNumber(*row.runtime_ms) : "NA",
                    "\n");
  }
  return out;
}

absl::StatusOr<std::vector<ResultRow>> ParseRawCsv(absl::string_view text) {
  std::vector<absl::string_view> lines =
      absl::StrSplit(text, '\n', absl::SkipEmpty());
  if (lines.empty() || absl::StripAsciiWhitespace(lines[0]) != kRawHeader) {
    return absl::InvalidArgumentError(
        absl::StrCat("raw CSV must start with the header ", kRawHeader));
  }
  std::vector<ResultRow> rows;
  for (size_t k = 1; k < lines.size(); ++k) {
    std::vector<absl::string_view> f =
        absl::StrSplit(absl::StripAsciiWhitespace(lines[k]), ',');
    const auto bad = [&](absl::string_view what) {
      return absl::InvalidArgumentError(
          absl::StrFormat("raw CSV line %d: bad %s", k + 1, what));
    };
    if (f.size() != 7) return bad("field count");
    ResultRow row;
    auto scenario = ParseScenario(f[0]);
    if (!scenario.ok()) return bad("scenario");
    row.scenario = *scenario;
    if (!absl::SimpleAtod(f[1], &row.alpha)) return bad("alpha");
    if (!absl::SimpleAtoi(f[2], &row.delta)) return bad("delta");
    if (!absl::SimpleAtoi(f[3], &row.rep)) return bad("rep");
    if (!absl::SimpleAtod(f[4], &row.scaled_error)) return bad("scaled_error");
    if (!absl::SimpleAtoi(f[5], &row.k_hat)) return bad("k_hat");
    if (f[6] != "NA") {
      double ms = 0.0;
      if (!absl::SimpleAtod(f[6], &ms)) return bad("runtime_ms");
      row.runtime_ms = ms;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string SummaryCsv(const std::vector<SummaryRow>& summary) {
  std::string out = "scenario,alpha,delta,median_scaled_error\n";
  for (const SummaryRow& row : summary) {
    absl::StrAppend(&out, ScenarioName(row.cell.scenario), ",",
                    FormatNumber(row.cell.alpha), ",", row.cell.delta, ",",
                    FormatNumber(row.median), "\n");
  }
  return out;
}

absl::StatusOr<std::vector<std::string>> EmitOutputs(
    const ExperimentConfig& config, const ExperimentResult& result) {
  if (result.summary.empty()) {
    return absl::InvalidArgumentError("no results to write");
  }
  const fs::path dir(config.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(absl::StrCat(
        "cannot create output directory '", dir.string(), "': ", ec.message()));
  }
  std::vector<std::string> written;
  const fs::path raw = dir / config.raw_csv;
  PRIVNET_RETURN_IF_ERROR(WriteFile(raw, RawCsv(result.rows)));
  written.push_back(raw.string());
  const fs::path summary = dir / config.summary_csv;
  PRIVNET_RETURN_IF_ERROR(WriteFile(summary, SummaryCsv(result.summary)));
  written.push_back(summary.string());
  if (!config.plots) return written;

  for (Scenario scenario : config.scenarios) {
    std::vector<PlotSeries> series;
    std::set<int64_t> deltas;
    for (const SummaryRow& row : result.summary) {
      if (row.cell.scenario != scenario) continue;
      deltas.insert(row.cell.delta);
      const std::string label =
          scenario == Scenario::kNone
              ? "no privacy"
              : absl::StrCat("alpha = ", FormatNumber(row.cell.alpha));
      if (series.empty() || series.back().label != label) {
        series.push_back({label, {}});
      }
      series.back().points.emplace_back(static_cast<double>(row.cell.delta),
                                        row.median);
    }
    if (series.empty()) continue;
    PlotOptions plot;
    plot.title = absl::StrCat("Median scaled Hausdorff error, ",
                              ScenarioName(scenario));
    plot.x_label = "Delta";
    plot.y_label = "median scaled error";
    plot.log_x = deltas.size() > 1;
    plot.y_lo = 0.0;
    plot.y_hi = 1.0;
    const fs::path svg = dir / absl::StrCat(ScenarioName(scenario), ".svg");
    PRIVNET_RETURN_IF_ERROR(WriteFile(svg, RenderLinePlot(series, plot)));
    written.push_back(svg.string());
  }
  return written;
}

}  // namespace privnet
