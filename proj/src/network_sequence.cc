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

#include "privnet/network_sequence.h"

#include "absl/strings/str_format.h"

namespace privnet {

absl::string_view EntryDomainName(EntryDomain domain) {
  switch (domain) {
    case EntryDomain::kBinary01:
      return "binary01";
    case EntryDomain::kPlusMinusB:
      return "plus_minus_b";
  }
  return "unknown";
}

NetworkSequence NetworkSequence::Binary(int64_t length, int64_t rows,
                                        int64_t cols, bool symmetric) {
  NetworkSequence seq;
  seq.length_ = length;
  seq.rows_ = rows;
  seq.cols_ = cols;
  seq.domain_ = EntryDomain::kBinary01;
  seq.symmetric_ = symmetric;
  seq.scale_ = 1.0;
  seq.codes_.assign(length * rows * cols, 0);
  return seq;
}

NetworkSequence NetworkSequence::PlusMinus(int64_t length, int64_t rows,
                                           int64_t cols, double b) {
  NetworkSequence seq;
  seq.length_ = length;
  seq.rows_ = rows;
  seq.cols_ = cols;
  seq.domain_ = EntryDomain::kPlusMinusB;
  seq.symmetric_ = false;
  seq.scale_ = b;
  seq.codes_.assign(length * rows * cols, 1);
  return seq;
}

void NetworkSequence::AddFrameTo(int64_t t, std::span<double> acc,
                                 double weight) const {
  const int8_t* codes = codes_.data() + (t - 1) * frame_size();
  const double w = weight * scale_;
  const int64_t size = frame_size();
  for (int64_t k = 0; k < size; ++k) acc[k] += w * codes[k];
}

NetworkSequence NetworkSequence::Select(
    std::span<const int64_t> times) const {
  NetworkSequence out = *this;
  out.length_ = static_cast<int64_t>(times.size());
  out.codes_.resize(out.length_ * frame_size());
  for (int64_t k = 0; k < out.length_; ++k) {
    const auto src = frame(times[k]);
    std::copy(src.begin(), src.end(), out.mutable_frame(k + 1).begin());
  }
  return out;
}

absl::Status NetworkSequence::CheckInvariants() const {
  for (int64_t t = 1; t <= length_; ++t) {
    const auto f = frame(t);
    for (int64_t i = 0; i < rows_; ++i) {
      for (int64_t j = 0; j < cols_; ++j) {
        const int8_t c = f[i * cols_ + j];
        const bool ok = domain_ == EntryDomain::kBinary01 ? (c == 0 || c == 1)
                                                          : (c == -1 || c == 1);
        if (!ok) {
          return absl::FailedPreconditionError(absl::StrFormat(
              "entry (%d,%d) at t=%d has code %d outside domain %s", i, j, t,
              c, EntryDomainName(domain_)));
        }
        if (symmetric_ && f[j * cols_ + i] != c) {
          return absl::FailedPreconditionError(absl::StrFormat(
              "frame t=%d is not symmetric at (%d,%d)", t, i, j));
        }
      }
    }
  }
  return absl::OkStatus();
}

RealSequence RealSequence::FromNetwork(const NetworkSequence& seq) {
  RealSequence out(seq.length(), seq.rows(), seq.cols());
  for (int64_t t = 1; t <= seq.length(); ++t) {
    seq.AddFrameTo(t, out.mutable_frame(t), 1.0);
  }
  return out;
}

void RealSequence::AddFrameTo(int64_t t, std::span<double> acc,
                              double weight) const {
  const double* x = values_.data() + (t - 1) * rows_ * cols_;
  const int64_t size = rows_ * cols_;
  for (int64_t k = 0; k < size; ++k) acc[k] += weight * x[k];
}

RealSequence RealSequence::Select(std::span<const int64_t> times) const {
  RealSequence out(static_cast<int64_t>(times.size()), rows_, cols_);
  for (size_t k = 0; k < times.size(); ++k) {
    const auto src = frame(times[k]);
    std::copy(src.begin(), src.end(), out.mutable_frame(k + 1).begin());
  }
  return out;
}

}  // namespace privnet
