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

#include "privnet/node_mechanism.h"

#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "privnet/status_macros.h"

namespace privnet {

double LogInverseNormaliser(int64_t d) {
  const double ln2 = std::numbers::ln2;
  if (d % 2 == 1) {
    return LogBinomial(d - 1, (d - 1) / 2) - static_cast<double>(d - 1) * ln2;
  }
  const double log_denominator = LogAddExp(static_cast<double>(d - 1) * ln2,
                                           LogBinomial(d, d / 2) - ln2);
  return LogBinomial(d - 1, d / 2) - log_denominator;
}

absl::StatusOr<NodeMechParams> NodeConstants(int64_t d, double alpha) {
  if (d < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("row dimension d = %d must be at least 1", d));
  }
  if (!(alpha > 0.0) || std::isinf(alpha)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "privacy budget alpha = %g must be finite and positive", alpha));
  }
  NodeMechParams params;
  params.alpha = alpha;
  params.d = d;
  params.c_d = std::exp(-LogInverseNormaliser(d));
  // (e^a + 1) / (e^a - 1) = 1 / tanh(a / 2).
  params.b = params.c_d / std::tanh(alpha / 2.0);
  params.pi_alpha = 1.0 / (1.0 + std::exp(-alpha));
  return params;
}

absl::StatusOr<NodeSampler> NodeSampler::Create(int64_t d, double alpha) {
  PRIVNET_ASSIGN_OR_RETURN(const NodeMechParams params, NodeConstants(d, alpha));
  const int64_t upper_min = (d + 1) / 2;  // ceil(d/2)
  const int64_t lower_max = d / 2;        // floor(d/2)
  std::vector<double> upper_weights;
  for (int64_t k = upper_min; k <= d; ++k) {
    upper_weights.push_back(LogBinomial(d, k));
  }
  std::vector<double> lower_weights;
  for (int64_t k = 0; k <= lower_max; ++k) {
    lower_weights.push_back(LogBinomial(d, k));
  }
  return NodeSampler(params, Categorical::FromLogWeights(upper_weights),
                     Categorical::FromLogWeights(lower_weights), upper_min);
}

void NodeSampler::PrivatizeRow(std::span<const int8_t> row, Stream& rng,
                               std::span<int8_t> signs) const {
  std::vector<int64_t> scratch;
  PrivatizeRow(row, rng, signs, scratch);
}

void NodeSampler::PrivatizeRow(std::span<const int8_t> row, Stream& rng,
                               std::span<int8_t> signs,
                               std::vector<int64_t>& scratch) const {
  const int64_t d = params_.d;
  // Fair signs come from the bits of one draw per 64 coordinates.
  uint64_t bits = 0;
  for (int64_t j = 0; j < d; ++j) {
    if (j % 64 == 0) bits = rng();
    signs[j] = row[j] == 1 || (bits & 1) ? 1 : -1;
    bits >>= 1;
  }
  const bool agreeing = rng.Uniform01() <= params_.pi_alpha;
  const int64_t k = agreeing ? upper_min_ + upper_.Sample(rng)
                             : lower_.Sample(rng);
  // Choose the smaller of the agreeing and disagreeing sets uniformly by a
  // partial Fisher-Yates shuffle, then flip the disagreeing coordinates.
  const bool pick_agreements = k <= d - k;
  const int64_t picks = pick_agreements ? k : d - k;
  scratch.resize(d);
  for (int64_t j = 0; j < d; ++j) scratch[j] = j;
  for (int64_t m = 0; m < picks; ++m) {
    const int64_t r = m + static_cast<int64_t>(rng.UniformInt(d - m));
    std::swap(scratch[m], scratch[r]);
  }
  if (pick_agreements) {
    // Everything except the picked positions disagrees.
    for (int64_t j = 0; j < d; ++j) signs[j] = static_cast<int8_t>(-signs[j]);
    for (int64_t m = 0; m < picks; ++m) {
      signs[scratch[m]] = static_cast<int8_t>(-signs[scratch[m]]);
    }
  } else {
    for (int64_t m = 0; m < picks; ++m) {
      signs[scratch[m]] = static_cast<int8_t>(-signs[scratch[m]]);
    }
  }
}

absl::StatusOr<NetworkSequence> NodePrivatize(const NetworkSequence& seq,
                                              double alpha, uint64_t seed) {
  if (seq.domain() != EntryDomain::kBinary01) {
    return absl::InvalidArgumentError(
        "node mechanism needs a binary input sequence");
  }
  if (seq.symmetric()) {
    return absl::InvalidArgumentError(
        "node mechanism needs a bipartite (non-symmetric) sequence");
  }
  PRIVNET_ASSIGN_OR_RETURN(const NodeSampler sampler,
                           NodeSampler::Create(seq.cols(), alpha));
  const int64_t d = seq.cols();
  NetworkSequence out = NetworkSequence::PlusMinus(seq.length(), seq.rows(),
                                                   d, sampler.params().b);
  std::vector<int64_t> scratch;
  for (int64_t t = 1; t <= seq.length(); ++t) {
    const auto in = seq.frame(t);
    auto frame = out.mutable_frame(t);
    for (int64_t i = 0; i < seq.rows(); ++i) {
      Stream rng = DeriveStream(
          seed, "node", {static_cast<uint64_t>(t), static_cast<uint64_t>(i)});
      sampler.PrivatizeRow(in.subspan(i * d, d), rng, frame.subspan(i * d, d),
                           scratch);
    }
  }
  return out;
}

}  // namespace privnet
