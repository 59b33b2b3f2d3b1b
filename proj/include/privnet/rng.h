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

#ifndef PRIVNET_RNG_H_
#define PRIVNET_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <limits>
#include "absl/strings/string_view.h"

namespace privnet {

// SplitMix64 output function.
constexpr uint64_t Mix64(uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based random stream: the i-th draw is a pure function of
// (key, i). Streams are cheap to create, so every unit of parallel work
// (a time frame, a row, a repetition) derives its own.
class Stream {
 public:
  using result_type = uint64_t;

  explicit Stream(uint64_t key) : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    ++counter_;
    return Mix64(key_ + counter_ * kGolden);
  }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform01() {
    return static_cast<double>(operator()() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return Uniform01() < p; }

  // Uniform on {0, ..., n - 1}; n must be positive.
  uint64_t UniformInt(uint64_t n);

  uint64_t key() const { return key_; }
  uint64_t counter() const { return counter_; }

 private:
  static constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  uint64_t key_;
  uint64_t counter_ = 0;
};

// Derives an independent stream from a master seed, a purpose tag and an
// index path, e.g. DeriveStream(seed, "sample", {t}).
Stream DeriveStream(uint64_t seed, absl::string_view tag,
                    std::initializer_list<uint64_t> indices = {});

// Derives a child seed with the same mixing as DeriveStream.
uint64_t DeriveSeed(uint64_t seed, absl::string_view tag,
                    std::initializer_list<uint64_t> indices = {});

}  // namespace privnet

#endif  // PRIVNET_RNG_H_
