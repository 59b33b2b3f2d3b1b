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

#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "privnet/model_spec.h"
#include "privnet/network_sequence.h"
#include "privnet/node_mechanism.h"
#include "privnet/sampling.h"
#include "privnet/sequence_io.h"
#include "privnet/spec_io.h"

namespace privnet {
namespace {

namespace fs = std::filesystem;

std::string FreshDir(const std::string& name) {
  const fs::path dir = fs::path(testing::TempDir()) / ("privnet_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir.string();
}

bool SameFrames(const NetworkSequence& a, const NetworkSequence& b) {
  if (a.length() != b.length() || a.rows() != b.rows() ||
      a.cols() != b.cols() || a.domain() != b.domain() ||
      a.scale() != b.scale() || a.symmetric() != b.symmetric()) {
    return false;
  }
  for (int64_t t = 1; t <= a.length(); ++t) {
    if (!std::equal(a.frame(t).begin(), a.frame(t).end(), b.frame(t).begin())) {
      return false;
    }
  }
  return true;
}

ModelSpec SmallSpec(bool symmetric) {
  ModelSpec spec;
  spec.horizon = 6;
  spec.n1 = 4;
  spec.n2 = symmetric ? 4 : 5;
  spec.symmetric = symmetric;
  spec.change_points = {3};
  spec.segment_thetas = {*ProbMatrix::Constant(4, spec.n2, 0.2, symmetric),
                         *ProbMatrix::Constant(4, spec.n2, 0.7, symmetric)};
  return spec;
}

TEST(SequenceIoTest, BinaryRoundTrip) {
  auto seq = SampleSequence(SmallSpec(true), 3);
  ASSERT_TRUE(seq.ok());
  const std::string dir = FreshDir("binary");
  ASSERT_TRUE(WriteSequence(*seq, dir).ok());
  EXPECT_TRUE(fs::exists(fs::path(dir) / "manifest.json"));
  EXPECT_TRUE(fs::exists(fs::path(dir) / "frame_000006.csv.gz"));
  auto back = ReadSequence(dir);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_TRUE(SameFrames(*seq, *back));
}

TEST(SequenceIoTest, PlusMinusRoundTrip) {
  auto raw = SampleSequence(SmallSpec(false), 4);
  ASSERT_TRUE(raw.ok());
  auto seq = NodePrivatize(*raw, 1.0, 4);
  ASSERT_TRUE(seq.ok());
  const std::string dir = FreshDir("plusminus");
  ASSERT_TRUE(WriteSequence(*seq, dir).ok());
  auto back = ReadSequence(dir);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_TRUE(SameFrames(*seq, *back));
}

TEST(SequenceIoTest, RejectsMissingOrCorruptInput) {
  EXPECT_FALSE(ReadSequence(FreshDir("missing")).ok());
  auto seq = SampleSequence(SmallSpec(true), 3);
  ASSERT_TRUE(seq.ok());
  const std::string dir = FreshDir("corrupt");
  ASSERT_TRUE(WriteSequence(*seq, dir).ok());
  fs::remove(fs::path(dir) / "frame_000002.csv.gz");
  EXPECT_FALSE(ReadSequence(dir).ok());
}

TEST(SpecIoTest, ConstantSpecRoundTrip) {
  const std::string dir = FreshDir("spec_const");
  const std::string path = dir + "/spec.toml";
  const ModelSpec spec = SmallSpec(true);
  ASSERT_TRUE(WriteModelSpec(spec, path).ok());
  auto back = LoadModelSpec(path);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(back->horizon, 6);
  EXPECT_EQ(back->change_points, spec.change_points);
  EXPECT_TRUE(back->symmetric);
  EXPECT_EQ(FrobeniusDistance(back->segment_thetas[1], spec.segment_thetas[1]),
            0.0);
}

TEST(SpecIoTest, MatrixThetaRoundTrip) {
  const std::string dir = FreshDir("spec_matrix");
  const std::string path = dir + "/spec.toml";
  ModelSpec spec = SmallSpec(false);
  spec.dependence = Dependence::kIndependent;
  spec.segment_thetas[1] = *ProbMatrix::Create(
      4, 5, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0,
             0.0, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95},
      false);
  ASSERT_TRUE(WriteModelSpec(spec, path).ok());
  EXPECT_TRUE(fs::exists(dir + "/theta_1.csv"));
  auto back = LoadModelSpec(path);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(FrobeniusDistance(back->segment_thetas[1], spec.segment_thetas[1]),
            0.0);
}

TEST(SpecIoTest, ErrorsNameTheKey) {
  const std::string dir = FreshDir("spec_bad");
  const std::string path = dir + "/spec.toml";
  {
    std::ofstream out(path);
    out << "T = 10\nn1 = \"four\"\nn2 = 4\ntheta = [0.1]\n";
  }
  auto spec = LoadModelSpec(path);
  ASSERT_FALSE(spec.ok());
  EXPECT_NE(spec.status().message().find("n1"), absl::string_view::npos);
  {
    std::ofstream out(path);
    out << "T = 10\nn1 = 4\nn2 = 4\ntheta = [0.1, 2.0]\n"
           "change_points = [5]\n";
  }
  spec = LoadModelSpec(path);
  ASSERT_FALSE(spec.ok());
  EXPECT_NE(spec.status().message().find("theta[1]"), absl::string_view::npos);
  {
    std::ofstream out(path);
    out << "T = 10\nn1 = 4\nn2 = 4\ntheta = [0.1]\nhorizon = 3\n";
  }
  spec = LoadModelSpec(path);
  ASSERT_FALSE(spec.ok());
  EXPECT_NE(spec.status().message().find("horizon"), absl::string_view::npos);
}

}  // namespace
}  // namespace privnet
