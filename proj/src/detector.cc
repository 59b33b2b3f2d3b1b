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

#include "privnet/detector.h"

#include <bit>

#include "absl/strings/str_format.h"
#include "privnet/rng.h"

namespace privnet {

absl::StatusOr<std::vector<Interval>> GenRandomIntervals(
    int64_t horizon, int64_t count, std::optional<double> cap, uint64_t seed) {
  if (count < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("interval count M = %d must be at least 1", count));
  }
  if (horizon < 2) {
    return absl::InvalidArgumentError(
        absl::StrFormat("horizon T = %d must be at least 2", horizon));
  }
  if (cap.has_value() && !(*cap >= 2.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("interval length cap %g must be at least 2", *cap));
  }
  Stream rng = DeriveStream(seed, "intervals");
  std::vector<Interval> out;
  out.reserve(count);
  const auto draw = [&] {
    return 1 + static_cast<int64_t>(rng.UniformInt(horizon));
  };
  while (static_cast<int64_t>(out.size()) < count) {
    int64_t a = draw();
    int64_t b = draw();
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (cap.has_value() && static_cast<double>(b - a) > *cap) continue;
    out.push_back({a, b});
  }
  return out;
}

absl::Status ValidateDetectorConfig(const DetectorConfig& config) {
  if (!(config.tau > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("threshold tau = %g must be positive", config.tau));
  }
  if (!(config.shrink >= 0.0 && config.shrink < 0.5)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "shrink fraction %g must lie in [0, 1/2)", config.shrink));
  }
  if (config.min_scan < 2) {
    return absl::InvalidArgumentError(
        absl::StrFormat("min_scan = %d must be at least 2", config.min_scan));
  }
  return absl::OkStatus();
}

std::vector<int64_t> Estimate::Locations() const {
  std::vector<int64_t> out;
  out.reserve(detections.size());
  for (const Detection& d : detections) out.push_back(d.location);
  return out;
}

int64_t MaxRecursionDepth(int64_t horizon) {
  return static_cast<int64_t>(std::bit_width(static_cast<uint64_t>(horizon))) -
         1 + 5;
}

Estimate MapToOriginal(const Estimate& half_scale) {
  Estimate out = half_scale;
  for (Detection& d : out.detections) d.location = HalfToOriginal(d.location);
  return out;
}

}  // namespace privnet
