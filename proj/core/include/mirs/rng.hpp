// Copyright 2026 The mirs Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace mirs {

/// Mixes a 64-bit value with the SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Derives an independent sub-seed for a named stream of a master seed.
///
/// The derivation is `splitmix64(splitmix64(master ^ splitmix64(stream)) + index)`,
/// so every (master, stream, index) triple maps to its own generator state.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index = 0);

/// Sub-seed stream identifiers.
namespace streams {
inline constexpr std::uint64_t kMobility = 0x6d6f62696c697479ULL;  // "mobility"
inline constexpr std::uint64_t kGenetic = 0x67656e6574696373ULL;   // "genetics"
}  // namespace streams

/// Portable random source.
///
/// Engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The distributions are implemented here rather than taken from
/// <random> because the standard leaves their algorithms unspecified:
///   uniform()           -> (next >> 11) * 2^-53, in [0, 1)
///   uniform_index(n)    -> rejection sampling on the top of the 64-bit range
///   bernoulli(p)        -> uniform() < p
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::size_t uniform_index(std::size_t n);

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mirs
