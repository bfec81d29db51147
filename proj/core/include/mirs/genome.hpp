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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mirs/channel.hpp"
#include "mirs/geometry.hpp"
#include "mirs/scenario.hpp"

namespace mirs::ga {

/// Bounds of the five searched coordinates, in genome order:
/// uav x, uav y, uav z, irs x, irs y.
struct SearchBox {
  std::array<double, 5> lo{};
  std::array<double, 5> hi{};

  static SearchBox from_config(const ScenarioConfig& config);
  bool contains(const channel::Placement& p) const;
};

/// Fixed-point binary chromosome. Each coordinate occupies
/// bits_per_coordinate bits, most significant bit first; the integer code c
/// maps to lo + c / (2^bits - 1) * (hi - lo).
class PlacementGenome {
 public:
  PlacementGenome() = default;
  PlacementGenome(std::vector<std::uint8_t> bits, unsigned bits_per_coordinate);

  static PlacementGenome zeros(unsigned bits_per_coordinate);
  static PlacementGenome ones(unsigned bits_per_coordinate);

  unsigned bits_per_coordinate() const { return bits_per_coordinate_; }
  std::size_t size() const { return bits_.size(); }

  bool bit(std::size_t i) const { return bits_[i] != 0; }
  void set_bit(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }

  std::uint32_t code(std::size_t coordinate) const;
  void set_code(std::size_t coordinate, std::uint32_t code);

  std::string to_string() const;

  friend bool operator==(const PlacementGenome&, const PlacementGenome&) = default;

 private:
  std::vector<std::uint8_t> bits_;
  unsigned bits_per_coordinate_ = 0;
};

/// Throws std::domain_error when a coordinate lies outside the box.
PlacementGenome encode(const channel::Placement& placement, const SearchBox& box,
                       unsigned bits_per_coordinate);

/// Throws std::invalid_argument when the genome length is not five
/// coordinates of its declared width.
channel::Placement decode(const PlacementGenome& genome, const SearchBox& box);

/// Largest per-coordinate error decode(encode(p)) may have: half a
/// quantization step.
double quantization_bound(const SearchBox& box, std::size_t coordinate,
                          unsigned bits_per_coordinate);

}  // namespace mirs::ga
