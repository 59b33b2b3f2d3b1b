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

#ifndef PRIVNET_DETECTOR_H_
#define PRIVNET_DETECTOR_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "privnet/cusum.h"

namespace privnet {

// Seed interval (start, end) with 0 <= start < end <= T.
struct Interval {
  int64_t start = 0;
  int64_t end = 0;
};

// Draws `count` intervals whose endpoints are independent uniform draws from
// {1, ..., horizon}, ordered, with equal endpoints redrawn. With a cap, pairs
// longer than the cap are redrawn.
absl::StatusOr<std::vector<Interval>> GenRandomIntervals(
    int64_t horizon, int64_t count, std::optional<double> cap, uint64_t seed);

struct DetectorConfig {
  // Detection threshold; a scan maximum must exceed it strictly.
  double tau = 1.0;
  // Each clipped interval loses this fraction of its length at both ends.
  double shrink = 1.0 / 64.0;
  // Minimal shrunk length e - s that admits a scan.
  int64_t min_scan = 2;
};

absl::Status ValidateDetectorConfig(const DetectorConfig& config);

struct Detection {
  int64_t location = 0;
  double score = 0.0;
  // Index of the winning seed interval; -1 for plain binary segmentation.
  int64_t interval = -1;
};

// Sorted estimated change points. A location b means the fitted segments
// are (s, b] and (b, e].
struct Estimate {
  std::vector<Detection> detections;

  std::vector<int64_t> Locations() const;
};

// Recursion depth cap floor(log2 T) + 5.
int64_t MaxRecursionDepth(int64_t horizon);

template <typename S>
struct SplitSequences {
  // Times 1, 3, 5, ...
  S odd;
  // Times 2, 4, 6, ...
  S even;
};

// Splits a sequence into its odd and even times. For odd T the final odd
// time is dropped so both halves have floor(T/2) frames. Half-scale index t
// corresponds to original time 2t (see HalfToOriginal).
template <typename S>
absl::StatusOr<SplitSequences<S>> SplitEvenOdd(const S& seq) {
  if (seq.length() < 2) {
    return absl::InvalidArgumentError("splitting needs at least two frames");
  }
  const int64_t half = seq.length() / 2;
  std::vector<int64_t> odd_times(half), even_times(half);
  for (int64_t k = 0; k < half; ++k) {
    odd_times[k] = 2 * k + 1;
    even_times[k] = 2 * k + 2;
  }
  return SplitSequences<S>{seq.Select(odd_times), seq.Select(even_times)};
}

inline int64_t HalfToOriginal(int64_t t) { return 2 * t; }

// Applies HalfToOriginal to every location.
Estimate MapToOriginal(const Estimate& half_scale);

namespace internal {

template <FrameSequence U, FrameSequence V>
class NbsRunner {
 public:
  NbsRunner(const U& u, const V& v, std::span<const Interval> intervals,
            const DetectorConfig& config)
      : u_(u), v_(v), intervals_(intervals), config_(config),
        max_depth_(MaxRecursionDepth(u.length())) {}

  absl::Status Run(int64_t s, int64_t e, int64_t depth) {
    if (depth > max_depth_ || e - s < 2) return absl::OkStatus();
    double best_score = -std::numeric_limits<double>::infinity();
    int64_t best_m = -1;
    int64_t best_b = 0;
    for (size_t m = 0; m < intervals_.size(); ++m) {
      const int64_t lo = std::max(s, intervals_[m].start);
      const int64_t hi = std::min(e, intervals_[m].end);
      double score = -1.0;
      int64_t b = 0;
      if (hi > lo) {
        const double cut = config_.shrink * static_cast<double>(hi - lo);
        const auto s_m = static_cast<int64_t>(std::ceil(lo + cut));
        const auto e_m = static_cast<int64_t>(std::floor(hi - cut));
        if (e_m - s_m >= config_.min_scan) {
          auto scan = Scan(s_m, e_m);
          if (!scan.ok()) return scan.status();
          score = scan->value;
          b = scan->location;
        }
      }
      if (score > best_score) {
        best_score = score;
        best_m = static_cast<int64_t>(m);
        best_b = b;
      }
    }
    if (best_m < 0 || !(best_score > config_.tau)) return absl::OkStatus();
    estimate_.detections.push_back({best_b, best_score, best_m});
    if (absl::Status st = Run(s, best_b, depth + 1); !st.ok()) return st;
    return Run(best_b + 1, e, depth + 1);
  }

  absl::StatusOr<ScanResult> Scan(int64_t s, int64_t e) {
    const auto key = std::make_pair(s, e);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    auto scan = ScanArgmax(u_, v_, s, e);
    if (scan.ok()) cache_.emplace(key, *scan);
    return scan;
  }

  Estimate TakeEstimate() {
    std::sort(estimate_.detections.begin(), estimate_.detections.end(),
              [](const Detection& a, const Detection& b) {
                return a.location < b.location;
              });
    return std::move(estimate_);
  }

 private:
  const U& u_;
  const V& v_;
  std::span<const Interval> intervals_;
  DetectorConfig config_;
  int64_t max_depth_;
  std::map<std::pair<int64_t, int64_t>, ScanResult> cache_;
  Estimate estimate_;
};

template <FrameSequence U, FrameSequence V>
class BsRunner {
 public:
  BsRunner(const U& u, const V& v, const DetectorConfig& config)
      : u_(u), v_(v), config_(config),
        max_depth_(MaxRecursionDepth(u.length())) {}

  absl::Status Run(int64_t s, int64_t e, int64_t depth) {
    if (depth > max_depth_ || e - s < config_.min_scan) {
      return absl::OkStatus();
    }
    auto scan = ScanArgmax(u_, v_, s, e);
    if (!scan.ok()) return scan.status();
    if (!(scan->value > config_.tau)) return absl::OkStatus();
    estimate_.detections.push_back({scan->location, scan->value, -1});
    if (absl::Status st = Run(s, scan->location, depth + 1); !st.ok()) {
      return st;
    }
    return Run(scan->location + 1, e, depth + 1);
  }

  Estimate TakeEstimate() {
    std::sort(estimate_.detections.begin(), estimate_.detections.end(),
              [](const Detection& a, const Detection& b) {
                return a.location < b.location;
              });
    return std::move(estimate_);
  }

 private:
  const U& u_;
  const V& v_;
  DetectorConfig config_;
  int64_t max_depth_;
  Estimate estimate_;
};

}  // namespace internal

// Network binary segmentation over seed intervals. Starting from (0, T):
// every interval is clipped to the current segment (s, e) and shrunk by
// `shrink` of its length at both ends (start rounded up, end rounded down);
// intervals that still admit a scan report the CUSUM inner-product maximum,
// the others report -1. If the best report exceeds tau, its location b is
// recorded and the search recurses on (s, b) and (b + 1, e).
template <FrameSequence U, FrameSequence V>
absl::StatusOr<Estimate> NbsDetect(const U& u, const V& v,
                                   std::span<const Interval> intervals,
                                   const DetectorConfig& config) {
  if (absl::Status st = internal::CheckPair(u, v); !st.ok()) return st;
  if (absl::Status st = ValidateDetectorConfig(config); !st.ok()) return st;
  if (intervals.empty()) {
    return absl::InvalidArgumentError("seed interval set is empty");
  }
  internal::NbsRunner<U, V> runner(u, v, intervals, config);
  if (absl::Status st = runner.Run(0, u.length(), 0); !st.ok()) return st;
  return runner.TakeEstimate();
}

// Plain binary segmentation: scan the whole current segment, threshold at
// tau, recurse on (s, b) and (b + 1, e).
template <FrameSequence U, FrameSequence V>
absl::StatusOr<Estimate> BsDetect(const U& u, const V& v,
                                  const DetectorConfig& config) {
  if (absl::Status st = internal::CheckPair(u, v); !st.ok()) return st;
  if (absl::Status st = ValidateDetectorConfig(config); !st.ok()) return st;
  internal::BsRunner<U, V> runner(u, v, config);
  if (absl::Status st = runner.Run(0, u.length(), 0); !st.ok()) return st;
  return runner.TakeEstimate();
}

}  // namespace privnet

#endif  // PRIVNET_DETECTOR_H_
