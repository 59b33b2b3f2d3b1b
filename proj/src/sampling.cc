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

#include "privnet/sampling.h"

#include <algorithm>

#include "privnet/rng.h"
#include "privnet/status_macros.h"

namespace privnet {

absl::StatusOr<NetworkSequence> SampleSequence(const ModelSpec& spec,
                                               uint64_t seed) {
  PRIVNET_RETURN_IF_ERROR(ValidateSpec(spec).status());
  const int64_t n1 = spec.n1;
  const int64_t n2 = spec.n2;
  NetworkSequence seq =
      NetworkSequence::Binary(spec.horizon, n1, n2, spec.symmetric);
  for (int64_t t = 1; t <= spec.horizon; ++t) {
    Stream rng = DeriveStream(seed, "sample", {static_cast<uint64_t>(t)});
    const ProbMatrix& theta = spec.ThetaAt(t);
    auto frame = seq.mutable_frame(t);
    if (spec.symmetric) {
      for (int64_t i = 0; i < n1; ++i) {
        for (int64_t j = i; j < n2; ++j) {
          const int8_t a = rng.Bernoulli(theta(i, j)) ? 1 : 0;
          frame[i * n2 + j] = a;
          frame[j * n2 + i] = a;
        }
      }
    } else if (spec.dependence == Dependence::kIdenticalRows) {
      for (int64_t i = 0; i < n1; ++i) {
        const int8_t a = rng.Bernoulli(theta(i, 0)) ? 1 : 0;
        std::fill_n(frame.begin() + i * n2, n2, a);
      }
    } else {
      for (int64_t k = 0; k < n1 * n2; ++k) {
        frame[k] = rng.Bernoulli(theta.values()[k]) ? 1 : 0;
      }
    }
  }
  return seq;
}

absl::StatusOr<RealSequence> PopulationSequence(const ModelSpec& spec) {
  PRIVNET_RETURN_IF_ERROR(ValidateSpec(spec).status());
  RealSequence seq(spec.horizon, spec.n1, spec.n2);
  for (int64_t t = 1; t <= spec.horizon; ++t) {
    const auto values = spec.ThetaAt(t).values();
    std::copy(values.begin(), values.end(), seq.mutable_frame(t).begin());
  }
  return seq;
}

}  // namespace privnet
