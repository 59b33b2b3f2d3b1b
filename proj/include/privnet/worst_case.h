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

#ifndef PRIVNET_WORST_CASE_H_
#define PRIVNET_WORST_CASE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "privnet/model_spec.h"

namespace privnet {

enum class PrivacyLevel { kEdge, kNode };

// Hard single-change instances at the private detection boundary.
//
// Edge: symmetric n x n network, pre-change mean rho/2 + (kappa/n) v v^T,
// post-change mean rho/2, with kappa^2 = n / (68 (e^alpha - 1)^2 Delta).
// Node: bipartite n1 x n2 network with identical rows, row i has mean
// rho/2 + kappa / sqrt(n1 n2) * v_i before the change and rho/2 after, with
// kappa^2 = sqrt(n1) n2 / (20 (e^alpha - 1)^2 Delta).
//
// The change point is at time Delta; the horizon must be at least 2 Delta.
struct WorstCaseOptions {
  PrivacyLevel level = PrivacyLevel::kEdge;
  int64_t n1 = 0;
  // Ignored for the edge level (n2 = n1).
  int64_t n2 = 0;
  int64_t min_spacing = 0;
  int64_t horizon = 0;
  double rho = 0.0;
  double alpha = 0.0;
  uint64_t seed = 0;
  // Fixed sign vector; drawn uniformly from {-1,+1}^n1 with the seed when
  // absent.
  std::optional<std::vector<int>> signs;
};

// kappa^2 of the construction.
double WorstCaseKappaSquared(PrivacyLevel level, int64_t n1, int64_t n2,
                             int64_t min_spacing, double alpha);

absl::StatusOr<ModelSpec> WorstCaseInstance(const WorstCaseOptions& options);

}  // namespace privnet

#endif  // PRIVNET_WORST_CASE_H_
