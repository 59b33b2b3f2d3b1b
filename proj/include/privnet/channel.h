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

#ifndef PRIVNET_CHANNEL_H_
#define PRIVNET_CHANNEL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "privnet/node_mechanism.h"

namespace privnet {

inline constexpr int kMaxExactDimension = 12;

// Exact conditional law P(Z = z | V = v) of the node mechanism for all
// v in {0,1}^d and z in {-B,+B}^d. Vectors are bit masks: bit j of v is
// v_j, bit j of z is set when z_j = +B.
//
// Built by direct enumeration of the two-stage sampler: the intermediate
// sign vector A~ is enumerated over the coordinates where v_j = 0, and
// halfspace membership is decided by the inner product <z, A~>.
class ChannelTable {
 public:
  int d() const { return d_; }
  const NodeMechParams& params() const { return params_; }
  uint32_t num_vectors() const { return 1u << d_; }

  double prob(uint32_t v, uint32_t z) const {
    return pmf_[(static_cast<size_t>(v) << d_) | z];
  }
  std::span<const double> conditional(uint32_t v) const {
    return {pmf_.data() + (static_cast<size_t>(v) << d_), num_vectors()};
  }

 private:
  friend absl::StatusOr<ChannelTable> ChannelExact(int d, double alpha);

  int d_ = 0;
  NodeMechParams params_;
  std::vector<double> pmf_;
};

// Fails for d > kMaxExactDimension.
absl::StatusOr<ChannelTable> ChannelExact(int d, double alpha);

enum class Mechanism { kEdgeRR, kNode };

// Worst-case likelihood ratio max P(z | x) / P(z | x') over inputs x, x'
// and outputs z. For randomised response this is (1 - q) / q; for the node
// mechanism it is read off the exact channel table.
absl::StatusOr<double> PrivacyRatio(Mechanism mechanism, int d, double alpha);
double PrivacyRatio(const ChannelTable& table);

struct Moments {
  int d = 0;
  std::vector<double> mean;
  // Row-major d x d.
  std::vector<double> cov;

  double Cov(int i, int j) const { return cov[i * d + j]; }
};

// Moments of Z for the fixed input V = v.
Moments MomentsExact(const ChannelTable& table, uint32_t v);
absl::StatusOr<Moments> MomentsExact(int d, double alpha, uint32_t v);

// Moments of Z when V is random with law `v_pmf` over {0,1}^d masks.
absl::StatusOr<Moments> MomentsExact(const ChannelTable& table,
                                     std::span<const double> v_pmf);

// Moments of Z for a fixed real input x in [-1,1]^d, where the first stage
// draws A~_j = +1 with probability (1 + x_j) / 2. Enumerates all 2^d sign
// vectors and all 2^d outputs.
absl::StatusOr<Moments> MomentsForRealInput(double alpha,
                                            std::span<const double> x);

}  // namespace privnet

#endif  // PRIVNET_CHANNEL_H_
