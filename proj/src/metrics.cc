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

#include "privnet/metrics.h"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace privnet {
namespace {

// max_{a in from} min_{b in to} |a - b|
double Directed(std::span<const int64_t> from, std::span<const int64_t> to) {
  double worst = 0.0;
  for (int64_t a : from) {
    int64_t nearest = std::numeric_limits<int64_t>::max();
    for (int64_t b : to) nearest = std::min(nearest, std::abs(a - b));
    worst = std::max(worst, static_cast<double>(nearest));
  }
  return worst;
}

}  // namespace

double Hausdorff(std::span<const int64_t> s1, std::span<const int64_t> s2,
                 double min_spacing) {
  if (s1.empty() || s2.empty()) return min_spacing;
  return std::max(Directed(s1, s2), Directed(s2, s1));
}

double ScaledError(std::span<const int64_t> estimate,
                   std::span<const int64_t> truth, double min_spacing) {
  if (estimate.empty()) return 1.0;
  return std::clamp(Hausdorff(estimate, truth, min_spacing) / min_spacing, 0.0,
                    1.0);
}

EvalResult Evaluate(std::span<const int64_t> estimate,
                    std::span<const int64_t> truth, double min_spacing) {
  EvalResult r;
  r.hausdorff = Hausdorff(estimate, truth, min_spacing);
  r.scaled = ScaledError(estimate, truth, min_spacing);
  r.k_hat = static_cast<int64_t>(estimate.size());
  r.k_true = static_cast<int64_t>(truth.size());
  return r;
}

}  // namespace privnet
