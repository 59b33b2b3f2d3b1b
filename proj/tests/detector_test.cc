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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "privnet/network_sequence.h"
#include "privnet/rng.h"

namespace privnet {
namespace {

// Population sequence whose mean switches between `levels` at `changes`.
RealSequence Piecewise(int64_t length, const std::vector<int64_t>& changes,
                       const std::vector<std::vector<double>>& levels,
                       int64_t rows, int64_t cols) {
  RealSequence seq(length, rows, cols);
  for (int64_t t = 1; t <= length; ++t) {
    size_t seg = 0;
    while (seg < changes.size() && t > changes[seg]) ++seg;
    auto frame = seq.mutable_frame(t);
    for (size_t k = 0; k < frame.size(); ++k) frame[k] = levels[seg][k];
  }
  return seq;
}

const std::vector<double> kA = {0.2, 0.6, 0.6, 0.3};
const std::vector<double> kB = {0.7, 0.2, 0.2, 0.5};
const std::vector<double> kC = {0.1, 0.9, 0.9, 0.8};

TEST(GenRandomIntervalsTest, Contract) {
  auto a = GenRandomIntervals(10, 1, std::nullopt, 42);
  auto b = GenRandomIntervals(10, 1, std::nullopt, 42);
  ASSERT_TRUE(a.ok() && b.ok());
  ASSERT_EQ(a->size(), 1u);
  EXPECT_EQ((*a)[0].start, (*b)[0].start);
  EXPECT_EQ((*a)[0].end, (*b)[0].end);
  EXPECT_GE((*a)[0].start, 1);
  EXPECT_LT((*a)[0].start, (*a)[0].end);
  EXPECT_LE((*a)[0].end, 10);
}

TEST(GenRandomIntervalsTest, CapBoundsLength) {
  auto set = GenRandomIntervals(200, 500, 5.0, 3);
  ASSERT_TRUE(set.ok());
  for (const Interval& iv : *set) {
    EXPECT_LE(iv.end - iv.start, 5);
    EXPECT_GE(iv.start, 1);
    EXPECT_LT(iv.start, iv.end);
  }
}

TEST(GenRandomIntervalsTest, RejectsBadArguments) {
  EXPECT_FALSE(GenRandomIntervals(10, 0, std::nullopt, 1).ok());
  EXPECT_FALSE(GenRandomIntervals(10, 5, 1.5, 1).ok());
  EXPECT_FALSE(GenRandomIntervals(1, 5, std::nullopt, 1).ok());
}

TEST(GenRandomIntervalsTest, MinEndpointChiSquare) {
  // Two distinct uniform draws from {1..T}: P(min = k) = 2 (T - k) / (T (T - 1)).
  const int64_t horizon = 100;
  const int64_t count = 10000;
  auto set = GenRandomIntervals(horizon, count, std::nullopt, 2024);
  ASSERT_TRUE(set.ok());
  std::vector<double> observed(horizon, 0.0);
  for (const Interval& iv : *set) observed[iv.start] += 1;
  double chi2 = 0.0;
  for (int64_t k = 1; k < horizon; ++k) {
    const double expected = count * 2.0 * (horizon - k) /
                            (static_cast<double>(horizon) * (horizon - 1));
    chi2 += (observed[k] - expected) * (observed[k] - expected) / expected;
  }
  // 0.999 quantile of chi-square with 98 degrees of freedom.
  EXPECT_LT(chi2, 147.01035826441762);
}

TEST(SplitEvenOddTest, Lengths) {
  RealSequence six(6, 1, 1);
  RealSequence seven(7, 1, 1);
  for (int64_t t = 1; t <= 7; ++t) {
    if (t <= 6) six.mutable_frame(t)[0] = t;
    seven.mutable_frame(t)[0] = t;
  }
  auto a = SplitEvenOdd(six);
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(a->odd.length(), 3);
  EXPECT_EQ(a->even.length(), 3);
  EXPECT_EQ(a->odd.frame(2)[0], 3.0);
  EXPECT_EQ(a->even.frame(2)[0], 4.0);
  EXPECT_EQ(HalfToOriginal(2), 4);
  auto b = SplitEvenOdd(seven);
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(b->odd.length(), 3);
  EXPECT_EQ(b->even.length(), 3);
  EXPECT_EQ(b->odd.frame(3)[0], 5.0);
  EXPECT_FALSE(SplitEvenOdd(RealSequence(1, 1, 1)).ok());
}

TEST(SplitEvenOddTest, ChangePointMapsBack) {
  RealSequence seq = Piecewise(100, {50}, {kA, kB}, 2, 2);
  auto halves = SplitEvenOdd(seq);
  ASSERT_TRUE(halves.ok());
  auto est = BsDetect(halves->odd, halves->even, DetectorConfig{.tau = 1e-6});
  ASSERT_TRUE(est.ok());
  ASSERT_EQ(est->Locations(), std::vector<int64_t>{25});
  EXPECT_EQ(MapToOriginal(*est).Locations(), std::vector<int64_t>{50});
}

TEST(NbsDetectTest, ThresholdAboveMaximumGivesNothing) {
  RealSequence seq = Piecewise(40, {17}, {kA, kB}, 2, 2);
  std::vector<Interval> full = {{0, 40}};
  auto scan = ScanArgmax(seq, seq, 0, 40);
  ASSERT_TRUE(scan.ok());
  auto est = NbsDetect(seq, seq, full, DetectorConfig{.tau = scan->value});
  ASSERT_TRUE(est.ok());
  EXPECT_TRUE(est->detections.empty());
  auto bs = BsDetect(seq, seq, DetectorConfig{.tau = scan->value});
  ASSERT_TRUE(bs.ok());
  EXPECT_TRUE(bs->detections.empty());
}

TEST(NbsDetectTest, CenteredIntervalFindsChangeExactly) {
  for (int64_t length = 8; length <= 60; length += 4) {
    const int64_t delta = length / 2;
    for (int64_t eta = delta / 2; eta <= length - delta / 2; ++eta) {
      if (eta < 1 || eta >= length) continue;
      RealSequence seq = Piecewise(length, {eta}, {kA, kB}, 2, 2);
      const int64_t lo = std::max<int64_t>(0, eta - 3 * delta / 4);
      const int64_t hi = std::min<int64_t>(length, eta + 3 * delta / 4);
      if (hi - lo < 4) continue;
      std::vector<Interval> intervals = {{lo, hi}};
      auto est = NbsDetect(seq, seq, intervals, DetectorConfig{.tau = 1e-6});
      ASSERT_TRUE(est.ok());
      ASSERT_EQ(est->Locations(), std::vector<int64_t>{eta})
          << "T=" << length << " eta=" << eta;
      EXPECT_EQ(est->detections[0].interval, 0);
    }
  }
}

TEST(NbsDetectTest, RecoversTwoChangesWithRandomIntervals) {
  RealSequence seq = Piecewise(60, {20, 40}, {kA, kB, kC}, 2, 2);
  auto intervals = GenRandomIntervals(60, 200, std::nullopt, 9);
  ASSERT_TRUE(intervals.ok());
  auto est = NbsDetect(seq, seq, *intervals, DetectorConfig{.tau = 1e-6});
  ASSERT_TRUE(est.ok());
  EXPECT_EQ(est->Locations(), (std::vector<int64_t>{20, 40}));
}

TEST(NbsDetectTest, FullIntervalWithoutShrinkEqualsBs) {
  std::vector<std::vector<int64_t>> layouts;
  for (int64_t length = 10; length <= 60; length += 10) {
    layouts.clear();
    layouts.push_back({length / 3});
    layouts.push_back({length / 4, length / 2, 3 * length / 4});
    layouts.push_back({2, length - 3});
    for (const auto& changes : layouts) {
      std::vector<std::vector<double>> levels;
      for (size_t k = 0; k <= changes.size(); ++k) {
        levels.push_back(k % 3 == 0 ? kA : (k % 3 == 1 ? kB : kC));
      }
      RealSequence seq = Piecewise(length, changes, levels, 2, 2);
      const DetectorConfig cfg{.tau = 1e-6, .shrink = 0.0};
      std::vector<Interval> full = {{0, length}};
      auto nbs = NbsDetect(seq, seq, full, cfg);
      auto bs = BsDetect(seq, seq, cfg);
      ASSERT_TRUE(nbs.ok() && bs.ok());
      EXPECT_EQ(nbs->Locations(), bs->Locations()) << "T=" << length;
      EXPECT_EQ(bs->Locations(), changes) << "T=" << length;
    }
  }
}

TEST(NbsDetectTest, Deterministic) {
  RealSequence u(80, 3, 3), v(80, 3, 3);
  Stream rng(17);
  for (int64_t t = 1; t <= 80; ++t) {
    for (double& x : u.mutable_frame(t)) x = rng.Uniform01() + (t > 40);
    for (double& x : v.mutable_frame(t)) x = rng.Uniform01() + (t > 40);
  }
  auto intervals = GenRandomIntervals(80, 50, 30.0, 5);
  ASSERT_TRUE(intervals.ok());
  auto a = NbsDetect(u, v, *intervals, DetectorConfig{.tau = 2.0});
  auto b = NbsDetect(u, v, *intervals, DetectorConfig{.tau = 2.0});
  ASSERT_TRUE(a.ok() && b.ok());
  ASSERT_EQ(a->detections.size(), b->detections.size());
  for (size_t k = 0; k < a->detections.size(); ++k) {
    EXPECT_EQ(a->detections[k].location, b->detections[k].location);
    EXPECT_EQ(a->detections[k].score, b->detections[k].score);
    EXPECT_EQ(a->detections[k].interval, b->detections[k].interval);
  }
  const std::vector<int64_t> locs = a->Locations();
  EXPECT_TRUE(std::is_sorted(locs.begin(), locs.end()));
  EXPECT_TRUE(std::adjacent_find(locs.begin(), locs.end()) == locs.end());
  for (int64_t b_loc : locs) {
    EXPECT_GT(b_loc, 0);
    EXPECT_LT(b_loc, 80);
  }
}

TEST(NbsDetectTest, RaisingThresholdNeverAddsPoints) {
  RealSequence seq = Piecewise(60, {12, 30, 47}, {kA, kB, kC, kA}, 2, 2);
  auto intervals = GenRandomIntervals(60, 100, std::nullopt, 4);
  ASSERT_TRUE(intervals.ok());
  std::vector<int64_t> previous;
  bool first = true;
  for (double tau : {1e-6, 0.5, 1.0, 2.0, 3.0, 5.0, 8.0, 100.0}) {
    auto est = NbsDetect(seq, seq, *intervals, DetectorConfig{.tau = tau});
    ASSERT_TRUE(est.ok());
    const std::vector<int64_t> locs = est->Locations();
    if (!first) {
      EXPECT_TRUE(std::includes(previous.begin(), previous.end(), locs.begin(),
                                locs.end()))
          << "tau=" << tau;
    }
    previous = locs;
    first = false;
  }
  EXPECT_TRUE(previous.empty());
}

TEST(BsDetectTest, ConstantSequenceGivesNothing) {
  RealSequence seq = Piecewise(30, {}, {kA}, 2, 2);
  for (double tau : {1e-12, 1e-6, 1.0}) {
    auto est = BsDetect(seq, seq, DetectorConfig{.tau = tau});
    ASSERT_TRUE(est.ok());
    EXPECT_TRUE(est->detections.empty());
  }
}

TEST(BsDetectTest, TinyThresholdOnNoiseStaysBounded) {
  RealSequence u(64, 2, 2), v(64, 2, 2);
  Stream rng(8);
  for (int64_t t = 1; t <= 64; ++t) {
    for (double& x : u.mutable_frame(t)) x = rng.Uniform01();
    auto src = u.frame(t);
    std::copy(src.begin(), src.end(), v.mutable_frame(t).begin());
  }
  auto est = BsDetect(u, v, DetectorConfig{.tau = 1e-9});
  ASSERT_TRUE(est.ok());
  EXPECT_LT(static_cast<int64_t>(est->detections.size()), 64);
  EXPECT_EQ(MaxRecursionDepth(64), 11);
}

TEST(DetectorConfigTest, Validation) {
  EXPECT_TRUE(ValidateDetectorConfig(DetectorConfig{}).ok());
  EXPECT_FALSE(ValidateDetectorConfig(DetectorConfig{.tau = 0.0}).ok());
  EXPECT_FALSE(ValidateDetectorConfig(DetectorConfig{.shrink = 0.5}).ok());
  EXPECT_FALSE(ValidateDetectorConfig(DetectorConfig{.min_scan = 1}).ok());
  RealSequence seq(10, 1, 1);
  std::vector<Interval> none;
  EXPECT_FALSE(NbsDetect(seq, seq, none, DetectorConfig{}).ok());
  EXPECT_FALSE(BsDetect(seq, RealSequence(11, 1, 1), DetectorConfig{}).ok());
}

}  // namespace
}  // namespace privnet
