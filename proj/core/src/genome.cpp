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

#include "mirs/genome.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace mirs::ga {

namespace {

constexpr std::size_t kCoordinates = 5;

std::array<double, 5> coordinates(const channel::Placement& p) {
  return {p.uav.x, p.uav.y, p.uav.z, p.irs.x, p.irs.y};
}

std::uint32_t max_code(unsigned bits) { return (std::uint32_t{1} << bits) - 1; }

}  // namespace

SearchBox SearchBox::from_config(const ScenarioConfig& c) {
  SearchBox box;
  box.lo = {c.region.x_min, c.region.y_min, c.ga.uav_alt_min, c.region.x_min, c.region.y_min};
  box.hi = {c.region.x_max, c.region.y_max, c.ga.uav_alt_max, c.region.x_max, c.region.y_max};
  return box;
}

bool SearchBox::contains(const channel::Placement& p) const {
  const auto v = coordinates(p);
  for (std::size_t i = 0; i < kCoordinates; ++i) {
    if (!(v[i] >= lo[i] && v[i] <= hi[i])) return false;
  }
  return true;
}

PlacementGenome::PlacementGenome(std::vector<std::uint8_t> bits, unsigned bits_per_coordinate)
    : bits_(std::move(bits)), bits_per_coordinate_(bits_per_coordinate) {}

PlacementGenome PlacementGenome::zeros(unsigned bits_per_coordinate) {
  return PlacementGenome(std::vector<std::uint8_t>(kCoordinates * bits_per_coordinate, 0),
                         bits_per_coordinate);
}

PlacementGenome PlacementGenome::ones(unsigned bits_per_coordinate) {
  return PlacementGenome(std::vector<std::uint8_t>(kCoordinates * bits_per_coordinate, 1),
                         bits_per_coordinate);
}

std::uint32_t PlacementGenome::code(std::size_t coordinate) const {
  std::uint32_t c = 0;
  const std::size_t base = coordinate * bits_per_coordinate_;
  for (std::size_t i = 0; i < bits_per_coordinate_; ++i) {
    c = (c << 1) | bits_[base + i];
  }
  return c;
}

void PlacementGenome::set_code(std::size_t coordinate, std::uint32_t code) {
  const std::size_t base = coordinate * bits_per_coordinate_;
  for (std::size_t i = 0; i < bits_per_coordinate_; ++i) {
    const unsigned shift = bits_per_coordinate_ - 1 - static_cast<unsigned>(i);
    bits_[base + i] = static_cast<std::uint8_t>((code >> shift) & 1U);
  }
}

std::string PlacementGenome::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

PlacementGenome encode(const channel::Placement& placement, const SearchBox& box,
                       unsigned bits_per_coordinate) {
  if (bits_per_coordinate < 1 || bits_per_coordinate > 30) {
    throw std::invalid_argument("encode: bits_per_coordinate must lie in [1, 30]");
  }
  const auto v = coordinates(placement);
  const double levels = static_cast<double>(max_code(bits_per_coordinate));
  PlacementGenome genome = PlacementGenome::zeros(bits_per_coordinate);
  for (std::size_t i = 0; i < kCoordinates; ++i) {
    if (!(v[i] >= box.lo[i] && v[i] <= box.hi[i])) {
      throw std::domain_error(fmt::format("encode: coordinate {} = {} outside [{}, {}]", i,
                                          v[i], box.lo[i], box.hi[i]));
    }
    const double span = box.hi[i] - box.lo[i];
    const double frac = span > 0.0 ? (v[i] - box.lo[i]) / span : 0.0;
    genome.set_code(i, static_cast<std::uint32_t>(std::llround(frac * levels)));
  }
  return genome;
}

channel::Placement decode(const PlacementGenome& genome, const SearchBox& box) {
  const unsigned bits = genome.bits_per_coordinate();
  if (bits < 1 || bits > 30 || genome.size() != kCoordinates * bits) {
    throw std::invalid_argument(
        fmt::format("decode: genome of length {} is not 5 x {} bits", genome.size(), bits));
  }
  const std::uint32_t top = max_code(bits);
  std::array<double, 5> v{};
  for (std::size_t i = 0; i < kCoordinates; ++i) {
    const std::uint32_t c = genome.code(i);
    if (c == top) {
      v[i] = box.hi[i];
    } else {
      v[i] = box.lo[i] + static_cast<double>(c) / static_cast<double>(top) *
                             (box.hi[i] - box.lo[i]);
      v[i] = std::min(v[i], box.hi[i]);
    }
  }
  return channel::Placement{{v[0], v[1], v[2]}, {v[3], v[4]}};
}

double quantization_bound(const SearchBox& box, std::size_t coordinate,
                          unsigned bits_per_coordinate) {
  return (box.hi[coordinate] - box.lo[coordinate]) /
         static_cast<double>(max_code(bits_per_coordinate)) / 2.0;
}

}  // namespace mirs::ga
