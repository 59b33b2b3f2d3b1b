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

#ifndef PRIVNET_BINOMIAL_H_
#define PRIVNET_BINOMIAL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "privnet/rng.h"

namespace privnet {

// log C(n, k) via lgamma; -inf outside 0 <= k <= n.
double LogBinomial(int64_t n, int64_t k);

// log(exp(a) + exp(b)) without overflow.
double LogAddExp(double a, double b);

// Finite categorical distribution built from unnormalised log-weights.
// Entries with weight -inf have probability zero.
class Categorical {
 public:
  static Categorical FromLogWeights(std::span<const double> log_weights);

  int64_t size() const { return static_cast<int64_t>(probabilities_.size()); }
  std::span<const double> probabilities() const { return probabilities_; }

  // Inverse-CDF draw.
  int64_t Sample(Stream& rng) const;

 private:
  std::vector<double> probabilities_;
  std::vector<double> cdf_;
};

}  // namespace privnet

#endif  // PRIVNET_BINOMIAL_H_
