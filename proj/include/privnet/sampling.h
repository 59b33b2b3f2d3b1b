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

#ifndef PRIVNET_SAMPLING_H_
#define PRIVNET_SAMPLING_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "privnet/model_spec.h"
#include "privnet/network_sequence.h"

namespace privnet {

// Draws a binary network sequence from the spec. Frame t uses the stream
// DeriveStream(seed, "sample", {t}), so frames can be drawn in any order.
// Symmetric specs sample the upper triangle (diagonal included) and mirror.
absl::StatusOr<NetworkSequence> SampleSequence(const ModelSpec& spec,
                                               uint64_t seed);

// The mean sequence Theta(1), ..., Theta(T).
absl::StatusOr<RealSequence> PopulationSequence(const ModelSpec& spec);

}  // namespace privnet

#endif  // PRIVNET_SAMPLING_H_
