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

#include "privnet/channel.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "privnet/edge_rr.h"
#include "privnet/status_macros.h"

namespace privnet {
namespace {

absl::Status CheckDimension(int d) {
  if (d < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("dimension d = %d must be at least 1", d));
  }
  if (d > kMaxExactDimension) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "dimension d = %d exceeds the exact-enumeration limit of %d "
        "(cost grows like 6^d)",
        d, kMaxExactDimension));
  }
  return absl::OkStatus();
}

// <z, a> / B for sign masks z and a.
int SignedAgreement(int d, uint32_t z, uint32_t a) {
  return d - 2 * std::popcount(z ^ a);
}

// Halfspace sizes #{z : <z, a> >= 0} and #{z : <z, a> <= 0}, counted
// directly for a = +1...+1.
void HalfspaceSizes(int d, double* upper, double* lower) {
  const uint32_t all = (1u << d) - 1;
  int64_t up = 0;
  int64_t down = 0;
  for (uint32_t z = 0; z <= all; ++z) {
    const int s = SignedAgreement(d, z, all);
    if (s >= 0) ++up;
    if (s <= 0) ++down;
  }
  *upper = static_cast<double>(up);
  *lower = static_cast<double>(down);
}

// P(z | a) for every z, accumulated with weight w into out.
void AccumulateGivenSigns(int d, uint32_t a, double weight, double pi,
                          double upper, double lower, double* out) {
  const uint32_t count = 1u << d;
  for (uint32_t z = 0; z < count; ++z) {
    const int s = SignedAgreement(d, z, a);
    double p = 0.0;
    if (s >= 0) p += pi / upper;
    if (s <= 0) p += (1.0 - pi) / lower;
    out[z] += weight * p;
  }
}

Moments MomentsFromPmf(int d, double b, std::span<const double> pmf) {
  Moments m;
  m.d = d;
  m.mean.assign(d, 0.0);
  m.cov.assign(d * d, 0.0);
  std::vector<double> second(d * d, 0.0);
  for (uint32_t z = 0; z < pmf.size(); ++z) {
    const double p = pmf[z];
    if (p == 0.0) continue;
    for (int i = 0; i < d; ++i) {
      const double zi = (z >> i) & 1u ? b : -b;
      m.mean[i] += p * zi;
      for (int j = 0; j < d; ++j) {
        const double zj = (z >> j) & 1u ? b : -b;
        second[i * d + j] += p * zi * zj;
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      m.cov[i * d + j] = second[i * d + j] - m.mean[i] * m.mean[j];
    }
  }
  return m;
}

}  // namespace

absl::StatusOr<ChannelTable> ChannelExact(int d, double alpha) {
  PRIVNET_RETURN_IF_ERROR(CheckDimension(d));
  PRIVNET_ASSIGN_OR_RETURN(const NodeMechParams params,
                           NodeConstants(d, alpha));
  ChannelTable table;
  table.d_ = d;
  table.params_ = params;
  const uint32_t count = 1u << d;
  table.pmf_.assign(static_cast<size_t>(count) * count, 0.0);
  double upper = 0.0;
  double lower = 0.0;
  HalfspaceSizes(d, &upper, &lower);
  for (uint32_t v = 0; v < count; ++v) {
    const uint32_t free = ~v & (count - 1);
    const double weight = std::ldexp(1.0, -std::popcount(free));
    double* out = table.pmf_.data() + (static_cast<size_t>(v) << d);
    // Enumerate the subsets of the free coordinates that come up +1.
    uint32_t s = 0;
    while (true) {
      AccumulateGivenSigns(d, v | s, weight, params.pi_alpha, upper, lower,
                           out);
      if (s == free) break;
      s = (s - free) & free;
    }
  }
  return table;
}

double PrivacyRatio(const ChannelTable& table) {
  double worst = 1.0;
  const uint32_t count = table.num_vectors();
  for (uint32_t z = 0; z < count; ++z) {
    double hi = 0.0;
    double lo = 1.0;
    for (uint32_t v = 0; v < count; ++v) {
      const double p = table.prob(v, z);
      hi = std::max(hi, p);
      lo = std::min(lo, p);
    }
    worst = std::max(worst, hi / lo);
  }
  return worst;
}

absl::StatusOr<double> PrivacyRatio(Mechanism mechanism, int d, double alpha) {
  if (mechanism == Mechanism::kEdgeRR) {
    PRIVNET_ASSIGN_OR_RETURN(const EdgeRRParams params,
                             MakeEdgeRRParams(alpha));
    return params.keep() / params.flip;
  }
  PRIVNET_ASSIGN_OR_RETURN(const ChannelTable table, ChannelExact(d, alpha));
  return PrivacyRatio(table);
}

Moments MomentsExact(const ChannelTable& table, uint32_t v) {
  return MomentsFromPmf(table.d(), table.params().b, table.conditional(v));
}

absl::StatusOr<Moments> MomentsExact(int d, double alpha, uint32_t v) {
  PRIVNET_ASSIGN_OR_RETURN(const ChannelTable table, ChannelExact(d, alpha));
  if (v >= table.num_vectors()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("input mask %d has bits beyond d = %d", v, d));
  }
  return MomentsExact(table, v);
}

absl::StatusOr<Moments> MomentsExact(const ChannelTable& table,
                                     std::span<const double> v_pmf) {
  const uint32_t count = table.num_vectors();
  if (v_pmf.size() != count) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "input law has %d cells, expected %d", v_pmf.size(), count));
  }
  std::vector<double> marginal(count, 0.0);
  double total = 0.0;
  for (uint32_t v = 0; v < count; ++v) {
    if (v_pmf[v] < 0.0) {
      return absl::InvalidArgumentError("input law has a negative cell");
    }
    total += v_pmf[v];
    const auto row = table.conditional(v);
    for (uint32_t z = 0; z < count; ++z) marginal[z] += v_pmf[v] * row[z];
  }
  if (std::abs(total - 1.0) > 1e-12) {
    return absl::InvalidArgumentError(
        absl::StrFormat("input law sums to %.17g, not 1", total));
  }
  return MomentsFromPmf(table.d(), table.params().b, marginal);
}

absl::StatusOr<Moments> MomentsForRealInput(double alpha,
                                            std::span<const double> x) {
  const int d = static_cast<int>(x.size());
  PRIVNET_RETURN_IF_ERROR(CheckDimension(d));
  for (double xi : x) {
    if (!(xi >= -1.0 && xi <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("input entry %g is outside [-1, 1]", xi));
    }
  }
  PRIVNET_ASSIGN_OR_RETURN(const NodeMechParams params,
                           NodeConstants(d, alpha));
  double upper = 0.0;
  double lower = 0.0;
  HalfspaceSizes(d, &upper, &lower);
  const uint32_t count = 1u << d;
  std::vector<double> pmf(count, 0.0);
  for (uint32_t a = 0; a < count; ++a) {
    double weight = 1.0;
    for (int j = 0; j < d; ++j) {
      weight *= (a >> j) & 1u ? (1.0 + x[j]) / 2.0 : (1.0 - x[j]) / 2.0;
    }
    if (weight == 0.0) continue;
    AccumulateGivenSigns(d, a, weight, params.pi_alpha, upper, lower,
                         pmf.data());
  }
  return MomentsFromPmf(d, params.b, pmf);
}

}  // namespace privnet
