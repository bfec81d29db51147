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


#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include <doctest.h>

#include "mirs/genome.hpp"
#include "mirs/mobility.hpp"
#include "mirs/optimizer.hpp"
#include "mirs/rng.hpp"
#include "mirs/scenario.hpp"

using namespace mirs;
using namespace mirs::ga;

namespace {

GaParams small_ga() {
  GaParams p;
  p.population_size = 20;
  p.max_iterations = 15;
  p.bits_per_coordinate = 6;
  return p;
}

ScenarioConfig small_config() {
  ScenarioConfig c;
  c.ga = small_ga();
  c.num_users = 6;
  c.mobility.num_slots = 3;
  return c;
}

std::vector<Vec2> some_users(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vec2> users;
  for (std::size_t i = 0; i < n; ++i) users.push_back({rng.uniform(0, 120), rng.uniform(0, 120)});
  return users;
}

}  // namespace

TEST_CASE("zero penalty when every user is feasible") {
  ScenarioConfig c;
  c.power.snr_threshold_db = -200.0;
  const std::vector<Vec2> users = some_users(4, 1);
  const channel::Placement p{{60, 60, 120}, {50, 50}};
  const SlotObjective o;
  const noma::SlotResult r = evaluate_placement(p, users, c, o);
  REQUIRE(r.feasible_count() == 4);
  CHECK(penalized_fitness(r, p, c, o) == r.sum_rate);
}

TEST_CASE("penalty is the weighted SINR deficit") {
  ScenarioConfig c;
  noma::SlotResult r;
  r.sum_rate = 3.0;
  r.users.resize(3);
  r.users[0].sinr = 100.0;  // at threshold: no penalty
  r.users[1].sinr = 90.0;
  r.users[2].sinr = 150.0;
  const SlotObjective o;
  CHECK(penalized_fitness(r, {}, c, o) == doctest::Approx(3.0 - 10.0 * 10.0));
  r.users[1].sinr = 100.0;
  CHECK(penalized_fitness(r, {}, c, o) == 3.0);
}

TEST_CASE("displacement penalty applies only beyond the limit") {
  ScenarioConfig c;
  c.power.snr_threshold_db = -200.0;
  c.ga.max_displacement = 10.0;
  c.ga.displacement_penalty = 2.0;
  noma::SlotResult r;
  r.sum_rate = 5.0;
  SlotObjective o;
  o.previous = channel::Placement{{0, 0, 100}, {0, 0}};
  CHECK(penalized_fitness(r, {{6, 8, 100}, {0, 10}}, c, o) == 5.0);
  CHECK(penalized_fitness(r, {{0, 0, 130}, {15, 0}}, c, o) ==
        doctest::Approx(5.0 - 2.0 * (20.0 + 5.0)));
  o.previous.reset();
  CHECK(penalized_fitness(r, {{0, 0, 130}, {15, 0}}, c, o) == 5.0);
}

TEST_CASE("dominating SINRs give no lower fitness") {
  ScenarioConfig c;
  const std::vector<Vec2> users{{100, 100}, {140, 90}};
  const SlotObjective o;
  // Same UAV; the IRS sits next to the users in A and far away in B.
  const channel::Placement a{{120, 95, 110}, {120, 95}};
  const channel::Placement b{{120, 95, 110}, {480, 480}};
  const auto ra = evaluate_placement(a, users, c, o);
  const auto rb = evaluate_placement(b, users, c, o);
  for (std::size_t i = 0; i < users.size(); ++i) REQUIRE(ra.users[i].sinr >= rb.users[i].sinr);
  CHECK(penalized_fitness(ra, a, c, o) >= penalized_fitness(rb, b, c, o));
}

TEST_CASE("tournament examples") {
  const std::vector<double> two{1.0, 2.0};
  Rng rng(5);
  for (int i = 0; i < 100; ++i) CHECK(tournament_select(two, 2, rng) == 1);

  const std::vector<double> pop{3, 9, 1, 9, 4};
  for (int i = 0; i < 100; ++i) CHECK(tournament_select(pop, 5, rng) == 1);

  std::map<std::size_t, int> counts;
  for (int i = 0; i < 50000; ++i) ++counts[tournament_select(pop, 1, rng)];
  for (std::size_t k = 0; k < pop.size(); ++k) {
    // Binomial(50000, 0.2): sd about 89.
    CHECK(std::abs(counts[k] - 10000) < 450);
  }
  CHECK_THROWS_AS(tournament_select(std::vector<double>{}, 1, rng), std::invalid_argument);
  CHECK_THROWS_AS(tournament_select(pop, 6, rng), std::invalid_argument);
}

TEST_CASE("crossover examples") {
  Rng rng(1);
  const PlacementGenome a = PlacementGenome::zeros(2);
  const PlacementGenome b = PlacementGenome::ones(2);

  auto [x, y] = crossover(a, b, 0.0, rng);
  CHECK(x == a);
  CHECK(y == b);

  auto [p, q] = crossover(a, a, 1.0, rng);
  CHECK(p == a);
  CHECK(q == a);

  // Find a draw whose cut lands at 2 and check the suffix swap.
  bool seen = false;
  for (std::uint64_t seed = 0; seed < 200 && !seen; ++seed) {
    Rng r(seed);
    auto [c1, c2] = crossover(a, b, 1.0, r);
    if (c1.to_string().find('1') != 2) continue;
    CHECK(c1.to_string() == "0011111111");
    CHECK(c2.to_string() == "1100000000");
    seen = true;
  }
  CHECK(seen);

  CHECK_THROWS_AS(crossover(a, PlacementGenome::zeros(3), 1.0, rng), std::invalid_argument);
}

TEST_CASE("crossover keeps prefix and swaps suffix") {
  Rng rng(17);
  const PlacementGenome a = PlacementGenome::zeros(6);
  const PlacementGenome b = PlacementGenome::ones(6);
  for (int i = 0; i < 200; ++i) {
    auto [c1, c2] = crossover(a, b, 1.0, rng);
    const std::string s1 = c1.to_string();
    const std::size_t cut = s1.find('1');
    REQUIRE(cut >= 1);
    REQUIRE(cut <= s1.size() - 1);
    CHECK(s1 == std::string(cut, '0') + std::string(s1.size() - cut, '1'));
    CHECK(c2.to_string() == std::string(cut, '1') + std::string(s1.size() - cut, '0'));
  }
}

TEST_CASE("mutation examples") {
  Rng rng(2);
  PlacementGenome g = PlacementGenome::zeros(4);
  g.set_code(2, 5);
  CHECK(mutate(g, 0.0, rng) == g);
  const PlacementGenome flipped = mutate(g, 1.0, rng);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(flipped.bit(i) != g.bit(i));
}

TEST_CASE("mutation flips follow the binomial law") {
  Rng rng(3);
  const PlacementGenome g = PlacementGenome::zeros(40);  // 200 bits
  const int trials = 10000;
  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    const PlacementGenome m = mutate(g, 0.01, rng);
    for (std::size_t i = 0; i < m.size(); ++i) total += m.bit(i) ? 1.0 : 0.0;
  }
  const double mean = total / trials;
  const double sd_of_mean = std::sqrt(200 * 0.01 * 0.99 / trials);
  CHECK(std::abs(mean - 2.0) <= 3.0 * sd_of_mean);
}

TEST_CASE("closed population returns its only genome") {
  GaParams p = small_ga();
  PlacementGenome g = PlacementGenome::zeros(6);
  g.set_code(0, 17);
  g.set_code(4, 63);
  Rng rng(4);
  int calls = 0;
  const auto record = run_genetic_search(
      p, 0.0, std::vector<PlacementGenome>(20, g),
      [&](const PlacementGenome& x) {
        ++calls;
        return static_cast<double>(x.code(0));
      },
      rng);
  CHECK(record.best == g);
  CHECK(record.best_value == 17.0);
  CHECK(record.best_fitness.size() == 16);
  CHECK(record.mean_fitness.size() == 16);
  CHECK(record.evaluations == static_cast<std::size_t>(calls));
  CHECK(record.evaluations == 20 + 15 * 18);
}

TEST_CASE("best fitness never decreases and beats the initial population") {
  ScenarioConfig c = small_config();
  const std::vector<Vec2> users = some_users(6, 8);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    std::vector<PlacementGenome> init;
    for (int i = 0; i < 20; ++i) init.push_back(random_genome(6, rng));
    std::vector<double> init_fit;
    for (const auto& g : init) init_fit.push_back(fitness(g, users, c));
    const auto record = run_genetic_search(
        c.ga, derive(c).mutation_prob_per_bit, init,
        [&](const PlacementGenome& g) { return fitness(g, users, c); }, rng);
    for (std::size_t k = 1; k < record.best_fitness.size(); ++k) {
      REQUIRE(record.best_fitness[k] >= record.best_fitness[k - 1]);
    }
    CHECK(record.best_value >= *std::max_element(init_fit.begin(), init_fit.end()));
    CHECK(record.best_value == record.best_fitness.back());
    CHECK(fitness(record.best, users, c) == record.best_value);
  }
}

TEST_CASE("slot optimum reaches the exhaustive optimum on a 2-bit grid") {
  ScenarioConfig c;
  c.ga.bits_per_coordinate = 2;
  c.ga.population_size = 50;
  c.ga.max_iterations = 100;
  const SearchBox box = SearchBox::from_config(c);
  const std::vector<Vec2> users{{500.0 / 3.0, 1000.0 / 3.0}};

  double best = -1e300;
  PlacementGenome arg;
  for (std::uint32_t code = 0; code < 1024; ++code) {
    PlacementGenome g = PlacementGenome::zeros(2);
    for (std::size_t k = 0; k < 5; ++k) g.set_code(k, (code >> (2 * (4 - k))) & 3U);
    const double f = fitness(g, users, c);
    if (f > best) {
      best = f;
      arg = g;
    }
  }
  const channel::Placement expected = decode(arg, box);
  CHECK(expected.uav.z == 100.0);
  CHECK(expected.irs.x == doctest::Approx(users[0].x));
  CHECK(expected.irs.y == doctest::Approx(users[0].y));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const SlotOptimum opt = optimize_slot(users, c, {}, rng);
    CHECK(opt.fitness == best);
    CHECK(opt.placement == expected);
  }
}

TEST_CASE("optimize_slot is deterministic and honours a warm start") {
  ScenarioConfig c = small_config();
  const std::vector<Vec2> users = some_users(6, 2);
  Rng a(11), b(11);
  const SlotOptimum x = optimize_slot(users, c, {}, a);
  const SlotOptimum y = optimize_slot(users, c, {}, b);
  CHECK(x.placement == y.placement);
  CHECK(x.record.best_fitness == y.record.best_fitness);
  CHECK(x.record.mean_fitness == y.record.mean_fitness);

  Rng w(12);
  const SlotOptimum warm = optimize_slot(users, c, {}, w, x.placement);
  CHECK(warm.fitness >= fitness(encode(x.placement, SearchBox::from_config(c), 6), users, c));
}

TEST_CASE("fixed IRS overrides the genome") {
  ScenarioConfig c = small_config();
  const std::vector<Vec2> users = some_users(6, 3);
  SlotObjective o;
  o.irs = noma::IrsMode::kStatic;
  o.fixed_irs = Vec2{42, 24};
  Rng rng(1);
  const SlotOptimum opt = optimize_slot(users, c, o, rng);
  CHECK(opt.placement.irs == Vec2{42, 24});
}

TEST_CASE("trajectory per scenario") {
  ScenarioConfig c = small_config();
  Rng trace_rng(derive_seed(5, streams::kMobility));
  const mobility::MobilityTrace trace = mobility::generate_trace(c, trace_rng);
  const SearchBox box = SearchBox::from_config(c);

  const auto mobile = optimize_trajectory(trace, c, ScenarioKind::kMobileIrsNoma, 5);
  const auto fixed = optimize_trajectory(trace, c, ScenarioKind::kStaticIrsNoma, 5);
  const auto none = optimize_trajectory(trace, c, ScenarioKind::kNoIrsNoma, 5);
  const auto oma = optimize_trajectory(trace, c, ScenarioKind::kMobileIrsOma, 5);
  REQUIRE(mobile.size() == 3);
  REQUIRE(fixed.size() == 3);
  REQUIRE(none.size() == 3);
  REQUIRE(oma.size() == 3);
  for (const auto* run : {&mobile, &fixed, &none, &oma}) {
    for (const SlotOptimum& s : *run) {
      CHECK(box.contains(s.placement));
      CHECK(s.placement.uav.z >= 100.0);
    }
  }
  // Static IRS: slot 1 is the joint optimum, then the vehicle stays put.
  CHECK(fixed[0].placement == mobile[0].placement);
  CHECK(fixed[1].placement.irs == fixed[0].placement.irs);
  CHECK(fixed[2].placement.irs == fixed[0].placement.irs);

  for (std::size_t k = 0; k < none.size(); ++k) {
    CHECK(none[k].result.sum_rate ==
          noma::slot_sum_rate(none[k].placement, trace.slot(k), c, noma::IrsMode::kNone).sum_rate);
  }
  // Deterministic per seed.
  const auto again = optimize_trajectory(trace, c, ScenarioKind::kMobileIrsNoma, 5);
  for (std::size_t k = 0; k < 3; ++k) CHECK(again[k].placement == mobile[k].placement);
}

TEST_CASE("configured static position is used from slot 1") {
  ScenarioConfig c = small_config();
  c.experiment.static_irs = Vec2{400, 10};
  Rng trace_rng(1);
  const auto trace = mobility::generate_trace(c, trace_rng);
  for (const SlotOptimum& s : optimize_trajectory(trace, c, ScenarioKind::kStaticIrsNoma, 1)) {
    CHECK(s.placement.irs == Vec2{400, 10});
  }
}

TEST_CASE("single slot trajectory equals optimize_slot") {
  ScenarioConfig c = small_config();
  c.mobility.num_slots = 1;
  Rng trace_rng(2);
  const auto trace = mobility::generate_trace(c, trace_rng);
  const auto traj = optimize_trajectory(trace, c, ScenarioKind::kMobileIrsNoma, 9);
  REQUIRE(traj.size() == 1);
  Rng rng(derive_seed(9, streams::kGenetic, 0));
  const SlotOptimum direct = optimize_slot(trace.slot(0), c, {}, rng);
  CHECK(traj[0].placement == direct.placement);
  CHECK(traj[0].fitness == direct.fitness);
}

TEST_CASE("no-IRS equals mobile IRS with zero reflection") {
  ScenarioConfig c = small_config();
  ScenarioConfig zero = c;
  zero.channel.irs_reflection_coeff = 0.0;
  Rng trace_rng(4);
  const auto trace = mobility::generate_trace(c, trace_rng);
  const auto none = optimize_trajectory(trace, c, ScenarioKind::kNoIrsNoma, 4);
  const auto beta0 = optimize_trajectory(trace, zero, ScenarioKind::kMobileIrsNoma, 4);
  for (std::size_t k = 0; k < none.size(); ++k) {
    CHECK(none[k].result.sum_rate == beta0[k].result.sum_rate);
    CHECK(none[k].placement.uav == beta0[k].placement.uav);
  }
}

TEST_CASE("scenario names") {
  for (ScenarioKind k : kAllScenarios) CHECK(parse_scenario(scenario_name(k)) == k);
  CHECK(scenario_name(ScenarioKind::kMobileIrsNoma) == "M-IRS-NOMA");
  CHECK(scenario_name(ScenarioKind::kStaticIrsNoma) == "S-IRS-NOMA");
  CHECK(scenario_name(ScenarioKind::kNoIrsNoma) == "No-IRS-NOMA");
  CHECK(scenario_name(ScenarioKind::kMobileIrsOma) == "M-IRS-OMA");
  CHECK_FALSE(parse_scenario("m-irs-noma").has_value());
}
