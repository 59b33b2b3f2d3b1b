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

#ifndef PRIVNET_CUSUM_H_
#define PRIVNET_CUSUM_H_

#include <cmath>
#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_format.h"

namespace privnet {

// A matrix sequence indexed by time t = 1..length().
template <typename S>
concept FrameSequence = requires(const S& s, int64_t t, std::span<double> acc,
                                 double w) {
  { s.length() } -> std::convertible_to<int64_t>;
  { s.rows() } -> std::convertible_to<int64_t>;
  { s.cols() } -> std::convertible_to<int64_t>;
  s.AddFrameTo(t, acc, w);
};

// CUSUM matrix of X over the window (s, e] split after t:
//   sqrt((e-t) / ((e-s)(t-s))) sum_{i=s+1}^{t} X_i
//     - sqrt((t-s) / ((e-s)(e-t))) sum_{i=t+1}^{e} X_i.
struct CusumMatrix {
  int64_t rows = 0;
  int64_t cols = 0;
  int64_t s = 0;
  int64_t t = 0;
  int64_t e = 0;
  std::vector<double> values;
};

inline absl::Status CheckWindow(int64_t length, int64_t s, int64_t t,
                                int64_t e) {
  if (!(0 <= s && s < t && t < e && e <= length)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "window needs 0 <= s < t < e <= T, got s=%d t=%d e=%d T=%d", s, t, e,
        length));
  }
  return absl::OkStatus();
}

template <FrameSequence S>
absl::StatusOr<CusumMatrix> CusumAt(const S& seq, int64_t s, int64_t t,
                                    int64_t e) {
  if (absl::Status st = CheckWindow(seq.length(), s, t, e); !st.ok()) return st;
  CusumMatrix out{seq.rows(), seq.cols(), s, t, e, {}};
  out.values.assign(seq.rows() * seq.cols(), 0.0);
  const double total = static_cast<double>(e - s);
  const double left = std::sqrt(static_cast<double>(e - t) /
                                (total * static_cast<double>(t - s)));
  const double right = std::sqrt(static_cast<double>(t - s) /
                                 (total * static_cast<double>(e - t)));
  for (int64_t i = s + 1; i <= t; ++i) seq.AddFrameTo(i, out.values, left);
  for (int64_t i = t + 1; i <= e; ++i) seq.AddFrameTo(i, out.values, -right);
  return out;
}

namespace internal {

inline double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (size_t k = 0; k < a.size(); ++k) sum += a[k] * b[k];
  return sum;
}

template <FrameSequence U, FrameSequence V>
absl::Status CheckPair(const U& u, const V& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() ||
      u.length() != v.length()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "sequence shapes differ: %dx%dx%d vs %dx%dx%d", u.length(), u.rows(),
        u.cols(), v.length(), v.rows(), v.cols()));
  }
  return absl::OkStatus();
}

}  // namespace internal

// Frobenius inner product of the CUSUM matrices of U and V.
template <FrameSequence U, FrameSequence V>
absl::StatusOr<double> CusumInner(const U& u, const V& v, int64_t s,
                                  int64_t t, int64_t e) {
  if (absl::Status st = internal::CheckPair(u, v); !st.ok()) return st;
  auto cu = CusumAt(u, s, t, e);
  if (!cu.ok()) return cu.status();
  auto cv = CusumAt(v, s, t, e);
  if (!cv.ok()) return cv.status();
  return internal::Dot(cu->values, cv->values);
}

struct ScanResult {
  int64_t location = 0;
  double value = 0.0;
};

// Maximises CusumInner(u, v, s, t, e) over t in {s+1, ..., e-1}; ties go to
// the smallest t. Values within round-off of each other count as ties, and a
// maximum within round-off of zero is reported as exactly zero.
//
// Runs in O((e - s) n1 n2) time and O(n1 n2) memory: with running partial
// sums P(t) and window totals S, the CUSUM is (w_l + w_r) P(t) - w_r S, so
// each t needs three inner products.
template <FrameSequence U, FrameSequence V>
absl::StatusOr<ScanResult> ScanArgmax(const U& u, const V& v, int64_t s,
                                      int64_t e) {
  if (absl::Status st = internal::CheckPair(u, v); !st.ok()) return st;
  if (!(0 <= s && e - s >= 2 && e <= u.length())) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "scan needs 0 <= s, e - s >= 2, e <= T; got s=%d e=%d T=%d", s, e,
        u.length()));
  }
  const size_t size = static_cast<size_t>(u.rows() * u.cols());
  std::vector<double> sum_u(size, 0.0), sum_v(size, 0.0);
  for (int64_t i = s + 1; i <= e; ++i) {
    u.AddFrameTo(i, sum_u, 1.0);
    v.AddFrameTo(i, sum_v, 1.0);
  }
  const double total = static_cast<double>(e - s);
  const double ss = internal::Dot(sum_u, sum_v);
  // Magnitude of the cancelling terms; sets the round-off floor.
  const double scale =
      std::sqrt(internal::Dot(sum_u, sum_u) * internal::Dot(sum_v, sum_v)) /
      total;
  const double tolerance = 1e-9 * scale;

  std::vector<double> part_u(size, 0.0), part_v(size, 0.0);
  ScanResult best{s + 1, 0.0};
  bool first = true;
  for (int64_t t = s + 1; t <= e - 1; ++t) {
    u.AddFrameTo(t, part_u, 1.0);
    v.AddFrameTo(t, part_v, 1.0);
    const double n_left = static_cast<double>(t - s);
    const double n_right = static_cast<double>(e - t);
    const double w_left = std::sqrt(n_right / (total * n_left));
    const double w_right = std::sqrt(n_left / (total * n_right));
    const double w_sum = w_left + w_right;
    const double pp = internal::Dot(part_u, part_v);
    const double ps = internal::Dot(part_u, sum_v);
    const double sp = internal::Dot(sum_u, part_v);
    const double value =
        w_sum * w_sum * pp - w_sum * w_right * (ps + sp) + w_right * w_right * ss;
    if (first || value > best.value + tolerance) {
      best = {t, value};
      first = false;
    }
  }
  if (std::abs(best.value) <= tolerance) best.value = 0.0;
  return best;
}

}  // namespace privnet

#endif  // PRIVNET_CUSUM_H_
