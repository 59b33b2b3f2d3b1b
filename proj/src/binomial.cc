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

#include "privnet/binomial.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace privnet {

double LogBinomial(int64_t n, int64_t k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double LogAddExp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

Categorical Categorical::FromLogWeights(std::span<const double> log_weights) {
  Categorical out;
  const double top = *std::max_element(log_weights.begin(), log_weights.end());
  double total = 0.0;
  out.probabilities_.reserve(log_weights.size());
  for (double lw : log_weights) {
    const double w = std::exp(lw - top);
    out.probabilities_.push_back(w);
    total += w;
  }
  double running = 0.0;
  out.cdf_.reserve(log_weights.size());
  for (double& p : out.probabilities_) {
    p /= total;
    running += p;
    out.cdf_.push_back(running);
  }
  out.cdf_.back() = 1.0;
  return out;
}

int64_t Categorical::Sample(Stream& rng) const {
  const double u = rng.Uniform01();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return it - cdf_.begin();
}

}  // namespace privnet
