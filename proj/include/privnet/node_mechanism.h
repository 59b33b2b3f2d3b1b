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

#ifndef PRIVNET_NODE_MECHANISM_H_
#define PRIVNET_NODE_MECHANISM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "privnet/binomial.h"
#include "privnet/network_sequence.h"
#include "privnet/rng.h"

namespace privnet {

// Constants of the l_inf-ball mechanism on {0,1}^d rows.
struct NodeMechParams {
  double alpha = 0.0;
  int64_t d = 0;
  // C_d^{-1} = C(d-1, (d-1)/2) / 2^(d-1)                        for odd d,
  //          = C(d-1, d/2) / (2^(d-1) + C(d, d/2) / 2)          for even d.
  double c_d = 0.0;
  // Output magnitude C_d (e^alpha + 1) / (e^alpha - 1).
  double b = 0.0;
  // Probability of sampling from the agreeing halfspace, e^a / (1 + e^a).
  double pi_alpha = 0.0;
};

// log C_d^{-1}, evaluated with log-space binomials.
double LogInverseNormaliser(int64_t d);

absl::StatusOr<NodeMechParams> NodeConstants(int64_t d, double alpha);

// Exact two-stage sampler for one row:
//   1. A~_j = +1 if a_j = 1, else a fair sign;
//   2. with probability pi_alpha draw z uniformly from the closed halfspace
//      {z in {-B,B}^d : <z, A~> >= 0}, otherwise from {<z, A~> <= 0}.
// Step 2 draws the agreement count k = #{j : sign(z_j) = A~_j} from the
// categorical law proportional to C(d, k) restricted to the halfspace
// (k >= d/2 or k <= d/2; both contain k = d/2 for even d), then places the
// agreements uniformly.
class NodeSampler {
 public:
  static absl::StatusOr<NodeSampler> Create(int64_t d, double alpha);

  const NodeMechParams& params() const { return params_; }

  // `row` holds 0/1 entries; `signs` receives sign(z_j) in {-1,+1}.
  void PrivatizeRow(std::span<const int8_t> row, Stream& rng,
                    std::span<int8_t> signs) const;

 private:
  NodeSampler(NodeMechParams params, Categorical upper, Categorical lower,
              int64_t upper_min)
      : params_(params), upper_(std::move(upper)), lower_(std::move(lower)),
        upper_min_(upper_min) {}

  void PrivatizeRow(std::span<const int8_t> row, Stream& rng,
                    std::span<int8_t> signs,
                    std::vector<int64_t>& scratch) const;

  NodeMechParams params_;
  // Agreement counts upper_min_..d and 0..floor(d/2).
  Categorical upper_;
  Categorical lower_;
  int64_t upper_min_;

  friend absl::StatusOr<NetworkSequence> NodePrivatize(const NetworkSequence&,
                                                       double, uint64_t);
};

// Privatises every row of every frame; row i at time t uses
// DeriveStream(seed, "node", {t, i}). Output entries are +-B.
absl::StatusOr<NetworkSequence> NodePrivatize(const NetworkSequence& seq,
                                              double alpha, uint64_t seed);

}  // namespace privnet

#endif  // PRIVNET_NODE_MECHANISM_H_
