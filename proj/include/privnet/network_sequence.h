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

#ifndef PRIVNET_NETWORK_SEQUENCE_H_
#define PRIVNET_NETWORK_SEQUENCE_H_

#include <cstdint>
#include <span>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace privnet {

enum class EntryDomain {
  kBinary01,
  // Entries are +B or -B for a fixed B > 0.
  kPlusMinusB,
};

absl::string_view EntryDomainName(EntryDomain domain);

// Time-ordered sequence of (bi)adjacency matrices. Frames are indexed by
// time t = 1..length(). Entries are stored as small integer codes: 0/1 for
// binary data and -1/+1 for the plus/minus B domain, scaled by scale().
class NetworkSequence {
 public:
  NetworkSequence() = default;

  static NetworkSequence Binary(int64_t length, int64_t rows, int64_t cols,
                                bool symmetric);
  static NetworkSequence PlusMinus(int64_t length, int64_t rows,
                                   int64_t cols, double b);

  int64_t length() const { return length_; }
  int64_t rows() const { return rows_; }
  int64_t cols() const { return cols_; }
  EntryDomain domain() const { return domain_; }
  bool symmetric() const { return symmetric_; }
  // 1 for binary data, B for the plus/minus domain.
  double scale() const { return scale_; }

  std::span<const int8_t> frame(int64_t t) const {
    return {codes_.data() + (t - 1) * frame_size(), static_cast<size_t>(frame_size())};
  }
  std::span<int8_t> mutable_frame(int64_t t) {
    return {codes_.data() + (t - 1) * frame_size(), static_cast<size_t>(frame_size())};
  }
  double value(int64_t t, int64_t i, int64_t j) const {
    return scale_ * frame(t)[i * cols_ + j];
  }

  // acc += weight * X(t).
  void AddFrameTo(int64_t t, std::span<double> acc, double weight) const;

  // Frames at the given times, in order.
  NetworkSequence Select(std::span<const int64_t> times) const;

  // Verifies the domain and symmetry invariants on every frame.
  absl::Status CheckInvariants() const;

 private:
  int64_t frame_size() const { return rows_ * cols_; }

  int64_t length_ = 0;
  int64_t rows_ = 0;
  int64_t cols_ = 0;
  EntryDomain domain_ = EntryDomain::kBinary01;
  bool symmetric_ = false;
  double scale_ = 1.0;
  std::vector<int8_t> codes_;
};

// Real-valued matrix sequence, used for population means and for linear
// combinations of observed sequences.
class RealSequence {
 public:
  RealSequence() = default;
  RealSequence(int64_t length, int64_t rows, int64_t cols)
      : length_(length), rows_(rows), cols_(cols),
        values_(length * rows * cols, 0.0) {}

  static RealSequence FromNetwork(const NetworkSequence& seq);

  int64_t length() const { return length_; }
  int64_t rows() const { return rows_; }
  int64_t cols() const { return cols_; }

  std::span<const double> frame(int64_t t) const {
    return {values_.data() + (t - 1) * rows_ * cols_, static_cast<size_t>(rows_ * cols_)};
  }
  std::span<double> mutable_frame(int64_t t) {
    return {values_.data() + (t - 1) * rows_ * cols_, static_cast<size_t>(rows_ * cols_)};
  }

  void AddFrameTo(int64_t t, std::span<double> acc, double weight) const;
  RealSequence Select(std::span<const int64_t> times) const;

 private:
  int64_t length_ = 0;
  int64_t rows_ = 0;
  int64_t cols_ = 0;
  std::vector<double> values_;
};

}  // namespace privnet

#endif  // PRIVNET_NETWORK_SEQUENCE_H_
