// Copyright 2026 The gsmve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Counter-based random streams. Every random decision is drawn from a stream
// keyed by (seed, m, mode, circuit index, block), so results do not depend on
// evaluation order or thread count.
//
// Key derivation: h = splitmix64(seed); h = splitmix64(h ^ field) for each of
// m, mode, index, block in that order. The stream is SplitMix64 started at h.

#include <cstdint>
#include <limits>

namespace gsmve {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Block ids used inside one (seed, m, mode, index) stream family.
inline constexpr std::uint64_t kCircuitBlock = 0;
inline constexpr std::uint64_t kShotBlock = 1;

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t m, std::uint64_t mode, std::uint64_t index,
                                 std::uint64_t block) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ m);
  h = splitmix64(h ^ mode);
  h = splitmix64(h ^ index);
  return splitmix64(h ^ block);
}

// SplitMix64 generator. Satisfies UniformRandomBitGenerator.
class Stream {
 public:
  using result_type = std::uint64_t;

  explicit Stream(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, n) by rejection; identical on every platform.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % n;
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace gsmve
