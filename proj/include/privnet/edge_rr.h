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

#ifndef PRIVNET_EDGE_RR_H_
#define PRIVNET_EDGE_RR_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "privnet/network_sequence.h"
#include "privnet/prob_matrix.h"

namespace privnet {

// Randomised response on single edges.
struct EdgeRRParams {
  double alpha = 0.0;
  // Flip probability 1 / (1 + e^alpha).
  double flip = 0.5;

  double keep() const { return 1.0 - flip; }
};

absl::StatusOr<EdgeRRParams> MakeEdgeRRParams(double alpha);

// q * theta = q (1 - theta) + (1 - q) theta, the mean of a privatised
// Bernoulli(theta) edge.
double RRCompose(double flip, double theta);

// Privatises every upper-triangle edge (diagonal included) once and mirrors
// it. Frame t uses DeriveStream(seed, "edge_rr", {t}).
absl::StatusOr<NetworkSequence> RRPrivatize(const NetworkSequence& seq,
                                            double alpha, uint64_t seed);

// Entrywise q * Theta.
absl::StatusOr<ProbMatrix> RRClosure(const ProbMatrix& theta, double alpha);

}  // namespace privnet

#endif  // PRIVNET_EDGE_RR_H_
