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

#ifndef PRIVNET_MODEL_SPEC_H_
#define PRIVNET_MODEL_SPEC_H_

#include <cstdint>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "privnet/prob_matrix.h"

namespace privnet {

enum class Dependence {
  kIndependent,
  // One Bernoulli draw per (row, time), copied across the row. Bipartite
  // only; every row of every segment mean must be constant.
  kIdenticalRows,
};

absl::string_view DependenceName(Dependence dependence);
absl::StatusOr<Dependence> ParseDependence(absl::string_view name);

// Generative description of a dynamic (bipartite) Bernoulli network.
//
// Time runs over t = 1..horizon. A change point eta marks the last time of
// a segment: segment k covers (eta_{k-1}, eta_k] with eta_0 = 0 and
// eta_{K+1} = horizon, so valid change points lie in {1, ..., horizon-1}.
struct ModelSpec {
  int64_t horizon = 0;
  int64_t n1 = 0;
  int64_t n2 = 0;
  bool symmetric = true;
  Dependence dependence = Dependence::kIndependent;
  std::vector<int64_t> change_points;
  // change_points.size() + 1 segment means.
  std::vector<ProbMatrix> segment_thetas;

  // Index of the segment containing time t (1-based).
  int64_t SegmentOf(int64_t t) const;
  const ProbMatrix& ThetaAt(int64_t t) const {
    return segment_thetas[SegmentOf(t)];
  }
};

// Summary parameters of a valid spec.
struct ModelParams {
  // Minimal segment length.
  int64_t min_spacing = 0;
  // max_t ||Theta(t)||_inf.
  double rho = 0.0;
  // Minimal Frobenius jump; +inf when there is no change point.
  double kappa = 0.0;
  // kappa / (sqrt(n1 n2) rho); +inf when there is no change point.
  double kappa0 = 0.0;
};

// Checks the spec and computes its parameters exactly.
absl::StatusOr<ModelParams> ValidateSpec(const ModelSpec& spec);

}  // namespace privnet

#endif  // PRIVNET_MODEL_SPEC_H_
