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

#include "privnet/edge_rr.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "privnet/rng.h"
#include "privnet/status_macros.h"

namespace privnet {

absl::StatusOr<EdgeRRParams> MakeEdgeRRParams(double alpha) {
  if (!(alpha >= 0.0) || std::isinf(alpha)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "privacy budget alpha = %g must be finite and non-negative", alpha));
  }
  EdgeRRParams params;
  params.alpha = alpha;
  params.flip = 1.0 / (1.0 + std::exp(alpha));
  return params;
}

double RRCompose(double flip, double theta) {
  return flip * (1.0 - theta) + (1.0 - flip) * theta;
}

absl::StatusOr<NetworkSequence> RRPrivatize(const NetworkSequence& seq,
                                            double alpha, uint64_t seed) {
  PRIVNET_ASSIGN_OR_RETURN(const EdgeRRParams params, MakeEdgeRRParams(alpha));
  if (seq.domain() != EntryDomain::kBinary01 || !seq.symmetric()) {
    return absl::InvalidArgumentError(
        "randomised response needs a symmetric binary sequence");
  }
  // Keep the edge when U <= e^alpha / (1 + e^alpha).
  const double keep = params.keep();
  const int64_t n = seq.rows();
  NetworkSequence out = NetworkSequence::Binary(seq.length(), n, n, true);
  for (int64_t t = 1; t <= seq.length(); ++t) {
    Stream rng = DeriveStream(seed, "edge_rr", {static_cast<uint64_t>(t)});
    const auto in = seq.frame(t);
    auto frame = out.mutable_frame(t);
    for (int64_t i = 0; i < n; ++i) {
      for (int64_t j = i; j < n; ++j) {
        const int8_t a = in[i * n + j];
        const int8_t b = rng.Uniform01() <= keep ? a : static_cast<int8_t>(1 - a);
        frame[i * n + j] = b;
        frame[j * n + i] = b;
      }
    }
  }
  return out;
}

absl::StatusOr<ProbMatrix> RRClosure(const ProbMatrix& theta, double alpha) {
  PRIVNET_ASSIGN_OR_RETURN(const EdgeRRParams params, MakeEdgeRRParams(alpha));
  std::vector<double> values(theta.values().begin(), theta.values().end());
  for (double& v : values) v = RRCompose(params.flip, v);
  return ProbMatrix::Create(theta.rows(), theta.cols(), std::move(values),
                            theta.symmetric());
}

}  // namespace privnet
