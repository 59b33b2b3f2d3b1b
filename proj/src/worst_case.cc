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

#include "privnet/worst_case.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "privnet/rng.h"
#include "privnet/status_macros.h"

namespace privnet {

double WorstCaseKappaSquared(PrivacyLevel level, int64_t n1, int64_t n2,
                             int64_t min_spacing, double alpha) {
  const double em1 = std::expm1(alpha);
  const double delta = static_cast<double>(min_spacing);
  if (level == PrivacyLevel::kEdge) {
    return static_cast<double>(n1) / (68.0 * em1 * em1 * delta);
  }
  return std::sqrt(static_cast<double>(n1)) * static_cast<double>(n2) /
         (20.0 * em1 * em1 * delta);
}

absl::StatusOr<ModelSpec> WorstCaseInstance(const WorstCaseOptions& options) {
  const bool edge = options.level == PrivacyLevel::kEdge;
  const int64_t n1 = options.n1;
  const int64_t n2 = edge ? options.n1 : options.n2;
  if (n1 < 1 || n2 < 1) {
    return absl::InvalidArgumentError("network dimensions must be positive");
  }
  if (options.min_spacing < 1 || options.horizon < 2 * options.min_spacing) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "need 1 <= Delta and T >= 2 Delta, got Delta = %d, T = %d",
        options.min_spacing, options.horizon));
  }
  if (!(options.rho > 0.0 && options.rho <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("rho = %g must lie in (0, 1]", options.rho));
  }
  if (!(options.alpha > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("alpha = %g must be positive", options.alpha));
  }

  const double kappa = std::sqrt(WorstCaseKappaSquared(
      options.level, n1, n2, options.min_spacing, options.alpha));
  const double amplitude =
      edge ? kappa / static_cast<double>(n1)
           : kappa / std::sqrt(static_cast<double>(n1) * n2);
  // Equivalent to kappa0^2 <= 1/4 with kappa0 = kappa / (sqrt(n1 n2) rho).
  if (amplitude > options.rho / 2.0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "construction infeasible: perturbation %g exceeds rho/2 = %g "
        "(kappa0^2 = %g > 1/4)",
        amplitude, options.rho / 2.0,
        std::pow(amplitude / options.rho, 2.0)));
  }

  std::vector<int> signs;
  if (options.signs.has_value()) {
    signs = *options.signs;
    if (static_cast<int64_t>(signs.size()) != n1) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "sign vector has %d entries, expected %d", signs.size(), n1));
    }
    for (int s : signs) {
      if (s != 1 && s != -1) {
        return absl::InvalidArgumentError("sign vector entries must be +-1");
      }
    }
  } else {
    Stream rng = DeriveStream(options.seed, "worst_case_signs");
    signs.resize(n1);
    for (auto& s : signs) s = rng.Bernoulli(0.5) ? 1 : -1;
  }

  const double base = options.rho / 2.0;
  std::vector<double> pre(n1 * n2);
  for (int64_t i = 0; i < n1; ++i) {
    for (int64_t j = 0; j < n2; ++j) {
      const double shift = edge ? amplitude * signs[i] * signs[j]
                                : amplitude * signs[i];
      pre[i * n2 + j] = base + shift;
    }
  }

  ModelSpec spec;
  spec.horizon = options.horizon;
  spec.n1 = n1;
  spec.n2 = n2;
  spec.symmetric = edge;
  spec.dependence =
      edge ? Dependence::kIndependent : Dependence::kIdenticalRows;
  spec.change_points = {options.min_spacing};
  PRIVNET_ASSIGN_OR_RETURN(ProbMatrix pre_theta,
                           ProbMatrix::Create(n1, n2, std::move(pre), edge));
  PRIVNET_ASSIGN_OR_RETURN(ProbMatrix post_theta,
                           ProbMatrix::Constant(n1, n2, base, edge));
  spec.segment_thetas.push_back(std::move(pre_theta));
  spec.segment_thetas.push_back(std::move(post_theta));
  PRIVNET_RETURN_IF_ERROR(ValidateSpec(spec).status());
  return spec;
}

}  // namespace privnet
