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


#include <cmath>

#include <doctest.h>

#include "mirs/genome.hpp"
#include "mirs/rng.hpp"
#include "mirs/scenario.hpp"

using namespace mirs;
using namespace mirs::ga;

TEST_CASE("search box follows the config") {
  const SearchBox box = SearchBox::from_config(ScenarioConfig{});
  CHECK(box.lo == std::array<double, 5>{0, 0, 100, 0, 0});
  CHECK(box.hi == std::array<double, 5>{500, 500, 300, 500, 500});
  CHECK(box.contains({{0, 500, 100}, {250, 0}}));
  CHECK_FALSE(box.contains({{0, 500, 99.9}, {250, 0}}));
  CHECK_FALSE(box.contains({{0, 500, 100}, {250, 500.1}}));
}

TEST_CASE("bounds encode to all-zero and all-one fields") {
  const SearchBox box = SearchBox::from_config(ScenarioConfig{});
  for (unsigned bits : {1u, 2u, 8u, 12u, 30u}) {
    CAPTURE(bits);
    CHECK(encode({{0, 0, 100}, {0, 0}}, box, bits) == PlacementGenome::zeros(bits));
    CHECK(encode({{500, 500, 300}, {500, 500}}, box, bits) == PlacementGenome::ones(bits));
    const channel::Placement lo = decode(PlacementGenome::zeros(bits), box);
    const channel::Placement hi = decode(PlacementGenome::ones(bits), box);
    CHECK(lo == channel::Placement{{0, 0, 100}, {0, 0}});
    CHECK(hi == channel::Placement{{500, 500, 300}, {500, 500}});
  }
}

TEST_CASE("midpoint with 8 bits encodes to 128") {
  const SearchBox box = SearchBox::from_config(ScenarioConfig{});
  const PlacementGenome g = encode({{250, 250, 200}, {250, 250}}, box, 8);
  for (std::size_t i = 0; i < 5; ++i) CHECK(g.code(i) == 128);
  CHECK(g.to_string().substr(0, 8) == "10000000");
}

TEST_CASE("codes are most significant bit first") {
  PlacementGenome g = PlacementGenome::zeros(4);
  g.set_code(1, 0b1011);
  CHECK(g.to_string() == "00001011000000000000");
  CHECK(g.code(1) == 11);
  g.flip(0);
  CHECK(g.code(0) == 8);
}

TEST_CASE("out-of-box placement is rejected") {
  const SearchBox box = SearchBox::from_config(ScenarioConfig{});
  CHECK_THROWS_AS(encode({{-1, 0, 100}, {0, 0}}, box, 8), std::domain_error);
  CHECK_THROWS_AS(encode({{0, 0, 50}, {0, 0}}, box, 8), std::domain_error);
  CHECK_THROWS_AS(encode({{0, 0, 100}, {0, 501}}, box, 8), std::domain_error);
}

TEST_CASE("wrong genome length is rejected") {
  const SearchBox box = SearchBox::from_config(ScenarioConfig{});
  CHECK_THROWS_AS(decode(PlacementGenome(std::vector<std::uint8_t>(39, 0), 8), box),
                  std::invalid_argument);
  CHECK_THROWS_AS(decode(PlacementGenome{}, box), std::invalid_argument);
}

TEST_CASE("round trip stays within the quantization bound") {
  const SearchBox box = SearchBox::from_config(ScenarioConfig{});
  for (unsigned bits : {2u, 5u, 12u, 20u}) {
    Rng rng(bits);
    double worst[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 1000; ++i) {
      const channel::Placement p{{rng.uniform(0, 500), rng.uniform(0, 500), rng.uniform(100, 300)},
                                 {rng.uniform(0, 500), rng.uniform(0, 500)}};
      const channel::Placement q = decode(encode(p, box, bits), box);
      REQUIRE(box.contains(q));
      const double err[5] = {std::abs(p.uav.x - q.uav.x), std::abs(p.uav.y - q.uav.y),
                             std::abs(p.uav.z - q.uav.z), std::abs(p.irs.x - q.irs.x),
                             std::abs(p.irs.y - q.irs.y)};
      for (std::size_t k = 0; k < 5; ++k) worst[k] = std::max(worst[k], err[k]);
    }
    for (std::size_t k = 0; k < 5; ++k) {
      CAPTURE(bits);
      CAPTURE(k);
      CHECK(worst[k] <= quantization_bound(box, k, bits) * (1 + 1e-12));
    }
  }
  CHECK(quantization_bound(box, 0, 8) == doctest::Approx(500.0 / 255.0 / 2.0));
}

TEST_CASE("every genome decodes inside the box") {
  ScenarioConfig c;
  c.region = {-30, 10, 470, 310};
  c.ga.uav_alt_min = 120;
  c.ga.uav_alt_max = 121;
  const SearchBox box = SearchBox::from_config(c);
  Rng rng(4);
  for (int i = 0; i < 5000; ++i) {
    PlacementGenome g = PlacementGenome::zeros(9);
    for (std::size_t b = 0; b < g.size(); ++b) g.set_bit(b, rng.bernoulli(0.5));
    const channel::Placement p = decode(g, box);
    REQUIRE(box.contains(p));
    REQUIRE(p.uav.z >= 120.0);
  }
}
