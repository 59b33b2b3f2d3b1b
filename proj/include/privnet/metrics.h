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

#ifndef PRIVNET_METRICS_H_
#define PRIVNET_METRICS_H_

#include <cstdint>
#include <span>

namespace privnet {

struct EvalResult {
  double hausdorff = 0.0;
  double scaled = 1.0;
  int64_t k_hat = 0;
  int64_t k_true = 0;
};

// Two-sided Hausdorff distance between point sets. Returns `min_spacing`
// when either set is empty.
double Hausdorff(std::span<const int64_t> s1, std::span<const int64_t> s2,
                 double min_spacing);

// Hausdorff distance divided by the spacing, clipped to [0, 1]. An empty
// estimate scores 1.
double ScaledError(std::span<const int64_t> estimate,
                   std::span<const int64_t> truth, double min_spacing);

EvalResult Evaluate(std::span<const int64_t> estimate,
                    std::span<const int64_t> truth, double min_spacing);

}  // namespace privnet

#endif  // PRIVNET_METRICS_H_
