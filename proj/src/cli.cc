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

#include "privnet/cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "privnet/channel.h"
#include "privnet/detector.h"
#include "privnet/edge_rr.h"
#include "privnet/node_mechanism.h"
#include "privnet/rng.h"
#include "privnet/sampling.h"
#include "privnet/sequence_io.h"
#include "privnet/simlab.h"
#include "privnet/spec_io.h"
#include "privnet/status_macros.h"
#include "privnet/worst_case.h"

namespace privnet {
namespace {

namespace fs = std::filesystem;

struct GenerateArgs {
  std::string spec;
  std::string worst_case;
  int64_t n1 = 50;
  int64_t n2 = 0;
  int64_t delta = 0;
  int64_t horizon = 0;
  double rho = 0.4;
  double alpha = 1.0;
};

struct PrivatizeArgs {
  std::string in;
  std::string mechanism;
  double alpha = 1.0;
};

struct DetectArgs {
  std::string in;
  std::string in_u;
  std::string in_v;
  std::string mechanism = "none";
  double alpha = 0.0;
  std::optional<double> tau;
  std::string tau_rule;
  int64_t intervals = 0;
  std::optional<double> cap;
  int64_t min_spacing = 0;
};

struct SimulateArgs {
  std::string config;
  int64_t threads = -1;
};

struct VerifyArgs {
  std::string mechanism = "node";
  int d = 1;
  double alpha = 1.0;
  int64_t samples = 0;
};

struct CommonArgs {
  uint64_t seed = 0;
  bool seed_set = false;
  std::string out;
};

absl::Status WriteText(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write '", path, "'"));
  }
  file << text;
  file.close();
  if (!file) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::Status RunGenerate(const GenerateArgs& args, const CommonArgs& common,
                         std::ostream& out) {
  if (common.out.empty()) {
    return absl::InvalidArgumentError("--out: output directory required");
  }
  ModelSpec spec;
  if (!args.worst_case.empty()) {
    if (!args.spec.empty()) {
      return absl::InvalidArgumentError(
          "--spec and --worst-case are mutually exclusive");
    }
    WorstCaseOptions options;
    if (args.worst_case == "edge") {
      options.level = PrivacyLevel::kEdge;
    } else if (args.worst_case == "node") {
      options.level = PrivacyLevel::kNode;
    } else {
      return absl::InvalidArgumentError(absl::StrCat(
          "--worst-case: expected edge or node, got '", args.worst_case, "'"));
    }
    options.n1 = args.n1;
    options.n2 = args.n2 > 0 ? args.n2 : args.n1;
    options.min_spacing = args.delta;
    options.horizon = args.horizon > 0 ? args.horizon : 2 * args.delta;
    options.rho = args.rho;
    options.alpha = args.alpha;
    options.seed = common.seed;
    PRIVNET_ASSIGN_OR_RETURN(spec, WorstCaseInstance(options));
  } else {
    if (args.spec.empty()) {
      return absl::InvalidArgumentError("--spec or --worst-case required");
    }
    PRIVNET_ASSIGN_OR_RETURN(spec, LoadModelSpec(args.spec));
  }
  PRIVNET_ASSIGN_OR_RETURN(ModelParams params, ValidateSpec(spec));
  PRIVNET_ASSIGN_OR_RETURN(NetworkSequence seq,
                           SampleSequence(spec, common.seed));
  PRIVNET_RETURN_IF_ERROR(WriteSequence(seq, common.out));
  PRIVNET_RETURN_IF_ERROR(
      WriteModelSpec(spec, (fs::path(common.out) / "spec.toml").string()));
  out << absl::StrFormat(
      "wrote %d frames of %dx%d to %s (Delta=%d rho=%g kappa0=%g)\n",
      seq.length(), seq.rows(), seq.cols(), common.out, params.min_spacing,
      params.rho, params.kappa0);
  return absl::OkStatus();
}

absl::Status RunPrivatize(const PrivatizeArgs& args, const CommonArgs& common,
                          std::ostream& out) {
  if (common.out.empty()) {
    return absl::InvalidArgumentError("--out: output directory required");
  }
  PRIVNET_ASSIGN_OR_RETURN(NetworkSequence seq, ReadSequence(args.in));
  NetworkSequence result;
  if (args.mechanism == "edge") {
    PRIVNET_ASSIGN_OR_RETURN(result, RRPrivatize(seq, args.alpha, common.seed));
  } else if (args.mechanism == "node") {
    PRIVNET_ASSIGN_OR_RETURN(result,
                             NodePrivatize(seq, args.alpha, common.seed));
  } else {
    return absl::InvalidArgumentError(absl::StrCat(
        "--mechanism: expected edge or node, got '", args.mechanism, "'"));
  }
  PRIVNET_RETURN_IF_ERROR(WriteSequence(result, common.out));
  out << absl::StrFormat("wrote %d privatised frames (%s) to %s\n",
                         result.length(), EntryDomainName(result.domain()),
                         common.out);
  return absl::OkStatus();
}

absl::StatusOr<TauRule> DetectTauRule(const DetectArgs& args) {
  if (!args.tau_rule.empty()) return ParseTauRule(args.tau_rule);
  PRIVNET_ASSIGN_OR_RETURN(Scenario scenario, ParseScenario(args.mechanism));
  return DefaultTau(scenario).rule;
}

absl::Status RunDetect(const DetectArgs& args, const CommonArgs& common,
                       std::ostream& out) {
  PRIVNET_RETURN_IF_ERROR(ParseScenario(args.mechanism).status());
  NetworkSequence u;
  NetworkSequence v;
  const bool split = !args.in.empty();
  if (split) {
    if (!args.in_u.empty() || !args.in_v.empty()) {
      return absl::InvalidArgumentError(
          "--in excludes --in-u and --in-v");
    }
    PRIVNET_ASSIGN_OR_RETURN(NetworkSequence seq, ReadSequence(args.in));
    PRIVNET_ASSIGN_OR_RETURN(auto halves, SplitEvenOdd(seq));
    u = std::move(halves.odd);
    v = std::move(halves.even);
  } else {
    if (args.in_u.empty() || args.in_v.empty()) {
      return absl::InvalidArgumentError("--in or both --in-u and --in-v required");
    }
    PRIVNET_ASSIGN_OR_RETURN(u, ReadSequence(args.in_u));
    PRIVNET_ASSIGN_OR_RETURN(v, ReadSequence(args.in_v));
  }
  DetectorConfig config;
  if (args.tau.has_value()) {
    if (!args.tau_rule.empty()) {
      return absl::InvalidArgumentError("--tau excludes --tau-rule");
    }
    config.tau = *args.tau;
  } else {
    PRIVNET_ASSIGN_OR_RETURN(TauRule rule, DetectTauRule(args));
    config.tau = TauFor(rule, u.rows(), u.cols(), u.length());
  }
  Estimate estimate;
  if (args.intervals > 0) {
    std::optional<double> cap;
    if (args.cap.has_value()) {
      if (args.min_spacing < 1) {
        return absl::InvalidArgumentError(
            "--cap needs --min-spacing (Delta on the detector's time scale)");
      }
      cap = *args.cap * static_cast<double>(args.min_spacing);
    }
    PRIVNET_ASSIGN_OR_RETURN(
        std::vector<Interval> intervals,
        GenRandomIntervals(u.length(), args.intervals, cap,
                           DeriveSeed(common.seed, "intervals")));
    PRIVNET_ASSIGN_OR_RETURN(estimate, NbsDetect(u, v, intervals, config));
  } else {
    PRIVNET_ASSIGN_OR_RETURN(estimate, BsDetect(u, v, config));
  }
  if (split) estimate = MapToOriginal(estimate);
  std::string csv = "location,score,interval\n";
  for (const Detection& d : estimate.detections) {
    absl::StrAppend(&csv, d.location, ",", FormatNumber(d.score), ",",
                    d.interval, "\n");
  }
  if (common.out.empty()) {
    out << csv;
    return absl::OkStatus();
  }
  PRIVNET_RETURN_IF_ERROR(WriteText(common.out, csv));
  out << absl::StrFormat("tau=%s change_points=%d written to %s\n",
                         FormatNumber(config.tau), estimate.detections.size(),
                         common.out);
  return absl::OkStatus();
}

absl::Status RunSimulate(const SimulateArgs& args, const CommonArgs& common,
                         std::ostream& out, std::ostream& err) {
  PRIVNET_ASSIGN_OR_RETURN(ExperimentConfig config,
                           LoadExperimentConfig(args.config));
  if (common.seed_set) config.seed = common.seed;
  if (!common.out.empty()) config.output_dir = common.out;
  RunOptions options;
  options.threads = args.threads >= 0 ? args.threads : ThreadsFromEnvironment();
  PRIVNET_ASSIGN_OR_RETURN(ExperimentResult result,
                           RunExperiment(config, options));
  for (const std::string& failure : result.failures) {
    err << "warning: " << failure << "\n";
  }
  PRIVNET_ASSIGN_OR_RETURN(std::vector<std::string> paths,
                           EmitOutputs(config, result));
  out << SummaryCsv(result.summary);
  for (const std::string& path : paths) out << "wrote " << path << "\n";
  if (!result.failures.empty()) {
    return absl::InternalError(absl::StrFormat(
        "%d repetition failures (see warnings)", result.failures.size()));
  }
  return absl::OkStatus();
}

// Largest deviation, in binomial standard deviations, between sampled and
// exact outcome frequencies over every input vector.
absl::StatusOr<double> SamplerDeviation(const ChannelTable& table,
                                        int64_t samples, uint64_t seed) {
  PRIVNET_ASSIGN_OR_RETURN(NodeSampler sampler,
                           NodeSampler::Create(table.d(), table.params().alpha));
  const int d = table.d();
  double worst = 0.0;
  std::vector<int8_t> row(d), signs(d);
  for (uint32_t v = 0; v < table.num_vectors(); ++v) {
    for (int j = 0; j < d; ++j) row[j] = (v >> j) & 1;
    std::vector<int64_t> counts(table.num_vectors(), 0);
    Stream rng = DeriveStream(seed, "verify", {v});
    for (int64_t k = 0; k < samples; ++k) {
      sampler.PrivatizeRow(row, rng, signs);
      uint32_t z = 0;
      for (int j = 0; j < d; ++j) z |= static_cast<uint32_t>(signs[j] > 0) << j;
      ++counts[z];
    }
    for (uint32_t z = 0; z < table.num_vectors(); ++z) {
      const double p = table.prob(v, z);
      const double n = static_cast<double>(samples);
      const double sd = std::sqrt(n * p * (1.0 - p));
      const double diff = std::abs(static_cast<double>(counts[z]) - n * p);
      if (sd > 0.0) {
        worst = std::max(worst, diff / sd);
      } else if (diff > 0.0) {
        worst = std::numeric_limits<double>::infinity();
      }
    }
  }
  return worst;
}

// Largest |E Z - v|, |Var Z_i - (B^2 - v_i^2)| and, over pairs i != j,
// |Cov(Z_i, Z_j) + v_i v_j| across all inputs v.
struct Residuals {
  double mean = 0.0;
  double variance = 0.0;
  double covariance = 0.0;
};

Residuals MomentResiduals(const ChannelTable& table) {
  Residuals r;
  const int d = table.d();
  const double b2 = table.params().b * table.params().b;
  for (uint32_t v = 0; v < table.num_vectors(); ++v) {
    const Moments m = MomentsExact(table, v);
    for (int i = 0; i < d; ++i) {
      const double vi = (v >> i) & 1;
      r.mean = std::max(r.mean, std::abs(m.mean[i] - vi));
      r.variance =
          std::max(r.variance, std::abs(m.Cov(i, i) - (b2 - vi * vi)));
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        const double vj = (v >> j) & 1;
        r.covariance = std::max(r.covariance, std::abs(m.Cov(i, j) + vi * vj));
      }
    }
  }
  return r;
}

absl::Status RunVerify(const VerifyArgs& args, const CommonArgs& common,
                       std::ostream& out, bool& passed) {
  Mechanism mechanism;
  if (args.mechanism == "node") {
    mechanism = Mechanism::kNode;
  } else if (args.mechanism == "edge") {
    mechanism = Mechanism::kEdgeRR;
  } else {
    return absl::InvalidArgumentError(absl::StrCat(
        "--mechanism: expected edge or node, got '", args.mechanism, "'"));
  }
  if (args.samples > 0 && mechanism != Mechanism::kNode) {
    return absl::InvalidArgumentError(
        "--samples applies to the node mechanism only");
  }
  PRIVNET_ASSIGN_OR_RETURN(double ratio,
                           PrivacyRatio(mechanism, args.d, args.alpha));
  const double bound = std::exp(args.alpha);
  passed = ratio <= bound + 1e-9;
  std::string mean = "NA";
  std::string variance = "NA";
  std::string covariance = "NA";
  std::string deviation = "NA";
  if (mechanism == Mechanism::kNode) {
    PRIVNET_ASSIGN_OR_RETURN(ChannelTable table,
                             ChannelExact(args.d, args.alpha));
    const Residuals r = MomentResiduals(table);
    mean = absl::StrFormat("%.3g", r.mean);
    variance = absl::StrFormat("%.3g", r.variance);
    covariance = absl::StrFormat("%.3g", r.covariance);
    if (args.samples > 0) {
      PRIVNET_ASSIGN_OR_RETURN(
          double sd, SamplerDeviation(table, args.samples, common.seed));
      deviation = absl::StrFormat("%.4g", sd);
      passed = passed && sd <= 4.0;
    }
  }
  const std::string report = absl::StrCat(
      "mechanism,d,alpha,max_ratio,bound,mean_residual,variance_residual,"
      "covariance_residual,sampler_deviation_sd,status\n",
      absl::StrFormat("%s,%d,%s,%.12g,%.12g,%s,%s,%s,%s,%s\n", args.mechanism,
                      args.d, FormatNumber(args.alpha), ratio, bound, mean,
                      variance, covariance, deviation,
                      passed ? "ok" : "violation"));
  out << report;
  if (!common.out.empty()) PRIVNET_RETURN_IF_ERROR(WriteText(common.out, report));
  return absl::OkStatus();
}

void AddCommon(CLI::App* app, CommonArgs& common) {
  app->add_option("--seed", common.seed, "Master random seed")
      ->each([&common](const std::string&) { common.seed_set = true; });
  app->add_option("--out", common.out, "Output path");
}

int ReportError(const absl::Status& status, std::ostream& err) {
  err << "error: " << absl::StatusCodeToString(status.code()) << ": "
      << status.message() << "\n";
  return kExitFailure;
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Change point detection for dynamic networks under local "
               "differential privacy",
               "privnet-cpd"};
  app.require_subcommand(1, 1);

  CommonArgs common;

  GenerateArgs gen;
  CLI::App* generate =
      app.add_subcommand("generate", "Sample a network sequence from a model");
  AddCommon(generate, common);
  generate->add_option("--spec", gen.spec, "Model spec (TOML)");
  generate->add_option("--worst-case", gen.worst_case,
                       "Boundary instance: edge or node");
  generate->add_option("--n1", gen.n1, "Rows (worst case)");
  generate->add_option("--n2", gen.n2, "Columns (worst case, node)");
  generate->add_option("--delta", gen.delta, "Minimal spacing (worst case)");
  generate->add_option("--horizon", gen.horizon,
                       "Length T (worst case, default 2 Delta)");
  generate->add_option("--rho", gen.rho, "Sparsity (worst case)");
  generate->add_option("--alpha", gen.alpha, "Privacy budget (worst case)");

  PrivatizeArgs priv;
  CLI::App* privatize =
      app.add_subcommand("privatize", "Apply an LDP mechanism to a sequence");
  AddCommon(privatize, common);
  privatize->add_option("--in", priv.in, "Input sequence directory")
      ->required();
  privatize->add_option("--mechanism", priv.mechanism, "edge or node")
      ->required();
  privatize->add_option("--alpha", priv.alpha, "Privacy budget")->required();

  DetectArgs det;
  CLI::App* detect = app.add_subcommand("detect", "Estimate change points");
  AddCommon(detect, common);
  detect->add_option("--in", det.in,
                     "Sequence directory, split into odd and even times");
  detect->add_option("--in-u", det.in_u, "First independent sequence");
  detect->add_option("--in-v", det.in_v, "Second independent sequence");
  detect->add_option("--mechanism", det.mechanism,
                     "none, edge or node (selects the default tau rule)");
  detect->add_option("--alpha", det.alpha, "Privacy budget of the input");
  detect->add_option("--tau", det.tau, "Fixed threshold");
  detect->add_option("--tau-rule", det.tau_rule,
                     "paper-none, paper-edge or paper-node");
  detect->add_option("--intervals", det.intervals,
                     "Random intervals M (0 runs plain binary segmentation)");
  detect->add_option("--cap", det.cap, "Interval length cap factor C_R");
  detect->add_option("--min-spacing", det.min_spacing,
                     "Delta used with --cap, on the detector's time scale");

  SimulateArgs sim;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a simulation grid from a config");
  AddCommon(simulate, common);
  simulate->add_option("--config", sim.config, "Experiment config (TOML)")
      ->required();
  simulate->add_option("--threads", sim.threads,
                       "Worker threads (default PRIVNET_THREADS or all)");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand(
      "verify-mechanism", "Check the privacy ratio of a mechanism exactly");
  AddCommon(verify, common);
  verify->add_option("--mechanism", ver.mechanism, "node (default) or edge");
  verify->add_option("--d", ver.d, "Row dimension")->required();
  verify->add_option("--alpha", ver.alpha, "Privacy budget")->required();
  verify->add_option("--samples", ver.samples,
                     "Monte Carlo draws per input for a sampler check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: USAGE: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  absl::Status status;
  if (generate->parsed()) {
    status = RunGenerate(gen, common, out);
  } else if (privatize->parsed()) {
    status = RunPrivatize(priv, common, out);
  } else if (detect->parsed()) {
    status = RunDetect(det, common, out);
  } else if (simulate->parsed()) {
    status = RunSimulate(sim, common, out, err);
  } else if (verify->parsed()) {
    bool passed = false;
    status = RunVerify(ver, common, out, passed);
    if (status.ok() && !passed) {
      status = absl::FailedPreconditionError("privacy check failed");
    }
  }
  if (!status.ok()) return ReportError(status, err);
  return kExitOk;
}

}  // namespace privnet
