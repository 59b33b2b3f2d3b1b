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

#include "privnet/rng.h"

namespace privnet {
namespace {

uint64_t HashTag(absl::string_view tag) {
  // FNV-1a.
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

uint64_t Stream::UniformInt(uint64_t n) {
  // Lemire's multiply-shift with rejection.
  unsigned __int128 m = static_cast<unsigned __int128>(operator()()) * n;
  uint64_t low = static_cast<uint64_t>(m);
  if (low < n) {
    const uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(operator()()) * n;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

uint64_t DeriveSeed(uint64_t seed, absl::string_view tag,
                    std::initializer_list<uint64_t> indices) {
  uint64_t h = Mix64(seed ^ 0x6a09e667f3bcc909ULL);
  h = Mix64(h ^ HashTag(tag));
  for (uint64_t index : indices) {
    h = Mix64(h + 0x9e3779b97f4a7c15ULL + Mix64(index));
  }
  return h;
}

Stream DeriveStream(uint64_t seed, absl::string_view tag,
                    std::initializer_list<uint64_t> indices) {
  return Stream(DeriveSeed(seed, tag, indices));
}

}  // namespace privnet
