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
#include <numeric>
#include <vector>

#include <doctest.h>

#include "mirs/channel.hpp"
#include "mirs/noma.hpp"
#include "mirs/rng.hpp"
#include "mirs/scenario.hpp"

using namespace mirs;
using namespace mirs::noma;

namespace {

constexpr double kAlphaWeak_beta028_ratio4 = 0.5958402614349186;
constexpr double kTwoUserSumRate = 4.087462841250339;
constexpr double kStrongRate = 4.392317422778761;  // log2(21)
constexpr double kOmaRate = 2.1961587113893803;    // 0.5 log2(21)

RateModel model(double rho, double decay, double threshold = 1.0) {
  RateModel m;
  m.rho = rho;
  m.noise = 1.0;
  m.ftpa_decay = decay;
  m.snr_threshold = threshold;
  return m;
}

channel::LinkGains gains_of(std::vector<double> uav, std::vector<double> irs = {}) {
  channel::LinkGains g;
  if (irs.empty()) irs.assign(uav.size(), 0.0);
  g.uav_gain = std::move(uav);
  g.irs_gain = std::move(irs);
  return g;
}

using Pairing = std::vector<std::pair<std::size_t, std::size_t>>;

// Exhaustive search over perfect matchings of an even user set, maximizing
// the summed squared gain gap within pairs.
void enumerate(std::vector<std::size_t> left, Pairing& current, const std::vector<double>& g,
               double& best_score, Pairing& best) {
  if (left.empty()) {
    double score = 0.0;
    for (auto [a, b] : current) score += (g[a] - g[b]) * (g[a] - g[b]);
    if (score > best_score) {
      best_score = score;
      best = current;
    }
    return;
  }
  const std::size_t first = left.front();
  for (std::size_t k = 1; k < left.size(); ++k) {
    std::vector<std::size_t> rest;
    for (std::size_t j = 1; j < left.size(); ++j) {
      if (j != k) rest.push_back(left[j]);
    }
    current.emplace_back(first, left[k]);
    enumerate(rest, current, g, best_score, best);
    current.pop_back();
  }
}

Pairing normalized(Pairing p, const std::vector<double>& g) {
  for (auto& [a, b] : p) {
    if (g[a] > g[b]) std::swap(a, b);
  }
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

TEST_CASE("pairing matches strongest with weakest") {
  const std::vector<double> g{1, 2, 3, 4};
  const auto pairs = pair_users(g);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].weak_user == 0);
  CHECK(pairs[0].strong_user == 3u);
  CHECK(pairs[1].weak_user == 1);
  CHECK(pairs[1].strong_user == 2u);
}

TEST_CASE("two users form one pair, weaker first") {
  const std::vector<double> g{9, 2};
  const auto pairs = pair_users(g);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].weak_user == 1);
  CHECK(pairs[0].strong_user == 0u);
}

TEST_CASE("equal gains break ties by index") {
  const std::vector<double> g{5, 5};
  const auto pairs = pair_users(g);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].weak_user == 0);
  CHECK(pairs[0].strong_user == 1u);
  CHECK(pair_users(g) == pairs);
}

TEST_CASE("odd count leaves the median user alone") {
  const std::vector<double> g{0.3, 0.1, 0.5, 0.2, 0.4};
  const auto pairs = pair_users(g);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[2].singleton());
  CHECK(pairs[2].weak_user == 0);
  CHECK(pairs[0].weak_user == 1);
  CHECK(pairs[0].strong_user == 2u);

  const std::vector<double> one{7};
  const auto single = pair_users(one);
  REQUIRE(single.size() == 1);
  CHECK(single[0].singleton());
  CHECK_THROWS_AS(pair_users(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("pairing agrees with exhaustive matching") {
  Rng rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 * (1 + rng.uniform_index(3));
    std::vector<double> g(n);
    for (double& v : g) v = std::pow(10.0, rng.uniform(-14, -8));
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    Pairing current, best;
    double best_score = -1.0;
    enumerate(all, current, g, best_score, best);

    Pairing got;
    for (const NomaPair& p : pair_users(g)) got.emplace_back(p.weak_user, *p.strong_user);
    CHECK(normalized(got, g) == normalized(best, g));
  }
}

TEST_CASE("FTPA examples") {
  const PowerSplit half = ftpa_allocate(1.0, 4.0, 1.0, 0.0);
  CHECK(half.weak == 0.5);
  CHECK(half.strong == 0.5);

  const PowerSplit full = ftpa_allocate(1.0, 4.0, 1.0, 1.0);
  CHECK(full.weak == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(full.strong == doctest::Approx(0.2).epsilon(1e-14));

  const PowerSplit table = ftpa_allocate(1e-12, 4e-12, 1e-11, 0.28);
  CHECK(table.weak == doctest::Approx(kAlphaWeak_beta028_ratio4).epsilon(1e-14));

  const PowerSplit strict = ftpa_allocate(1.0, 4.0, 1.0, 1.0, FtpaMode::kStrictEquation);
  CHECK(strict.weak == doctest::Approx(0.2).epsilon(1e-14));

  CHECK_THROWS_AS(ftpa_allocate(0.0, 1.0, 1.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(ftpa_allocate(1.0, -1.0, 1.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(ftpa_allocate(1.0, 1.0, 0.0, 0.3), std::domain_error);
}

TEST_CASE("FTPA stays finite for extreme gain ratios") {
  const PowerSplit s = ftpa_allocate(1e-300, 1e300, 1.0, 1.0);
  CHECK(std::isfinite(s.weak));
  CHECK(s.weak + s.strong == 1.0);
  CHECK(s.weak >= s.strong);
}

TEST_CASE("SINR examples") {
  NomaPair pair;
  pair.weak_user = 0;
  pair.strong_user = 1;
  pair.alpha_weak = 0.8;
  pair.alpha_strong = 0.2;
  const std::vector<double> irs{0.0, 0.0};

  const std::vector<double> strong_gains{0.5, 1.0};
  const double gs = sinr(Role::kStrong, pair, strong_gains, irs, 100.0);
  CHECK(gs == doctest::Approx(20.0).epsilon(1e-15));
  CHECK(std::log2(1.0 + gs) == doctest::Approx(kStrongRate).epsilon(1e-15));

  const std::vector<double> g{0.01, 0.04};
  CHECK(sinr(Role::kWeak, pair, g, irs, 1000.0) ==
        doctest::Approx(0.008 / 0.009).epsilon(1e-14));

  // Interference-limited ceiling as the noise term vanishes.
  CHECK(sinr(Role::kWeak, pair, g, irs, 1e18) ==
        doctest::Approx((0.8 * 0.01) / (0.2 * 0.04)).epsilon(1e-12));

  NomaPair single;
  single.weak_user = 0;
  const std::vector<double> g1{0.2};
  const std::vector<double> irs1{0.05};
  CHECK(sinr(Role::kWeak, single, g1, irs1, 100.0) == doctest::Approx(25.0).epsilon(1e-15));
}

TEST_CASE("two-user slot composes the SINR examples") {
  const SlotResult r = evaluate_noma(gains_of({0.04, 0.01}), model(1000.0, 1.0));
  REQUIRE(r.users.size() == 2);
  CHECK(r.users[1].alpha == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(r.users[0].alpha == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(r.users[1].sinr == doctest::Approx(0.008 / 0.009).epsilon(1e-13));
  CHECK(r.users[0].sinr == doctest::Approx(8.0).epsilon(1e-13));
  CHECK(r.sum_rate == doctest::Approx(kTwoUserSumRate).epsilon(1e-13));
  CHECK(r.users[0].pair_id == 0);
  CHECK(r.users[1].pair_id == 0);
}

TEST_CASE("feasibility against the threshold") {
  const SlotResult r = evaluate_noma(gains_of({0.04, 0.01}), model(1000.0, 1.0, 7.5));
  CHECK(r.users[0].feasible);
  CHECK_FALSE(r.users[1].feasible);
  CHECK(r.feasible_count() == 1);
  CHECK(r.sinr_deficit(7.5) == doctest::Approx(7.5 - 0.008 / 0.009));
}

TEST_CASE("no signal gives zero rate") {
  const SlotResult r = evaluate_oma(gains_of({0.0, 0.0, 0.0}), model(1.0, 0.28));
  CHECK(r.sum_rate == 0.0);
  const SlotResult tiny = evaluate_noma(gains_of({1e-300, 2e-300}), model(1e-20, 0.28));
  CHECK(tiny.sum_rate == 0.0);
}

TEST_CASE("OMA rates") {
  const SlotResult pair = evaluate_oma(gains_of({20.0, 20.0}), model(1.0, 0.28));
  CHECK(pair.users[0].rate == doctest::Approx(kOmaRate).epsilon(1e-15));
  CHECK(pair.sum_rate == doctest::Approx(2 * kOmaRate).epsilon(1e-15));

  const SlotResult single = evaluate_oma(gains_of({20.0}), model(1.0, 0.28));
  CHECK(single.sum_rate == doctest::Approx(kStrongRate).epsilon(1e-15));

  const SlotResult zero = evaluate_oma(gains_of({0.0, 20.0}), model(1.0, 0.28));
  CHECK(zero.users[0].rate == 0.0);
}

TEST_CASE("rate and sum invariants on random slots") {
  Rng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng.uniform_index(12);
    std::vector<double> uav(n), irs(n);
    for (std::size_t i = 0; i < n; ++i) {
      uav[i] = std::pow(10.0, rng.uniform(-14, -8));
      irs[i] = rng.bernoulli(0.3) ? 0.0 : std::pow(10.0, rng.uniform(-14, -8));
    }
    const double decay = rng.uniform();
    const RateModel m = model(std::pow(10.0, rng.uniform(8, 13)), decay, 100.0);
    const SlotResult with = evaluate_noma(gains_of(uav, irs), m);
    const SlotResult without = evaluate_noma(gains_of(uav), m);

    double sum = 0.0;
    for (const auto& u : with.users) {
      REQUIRE(u.rate >= 0.0);
      sum += u.rate;
    }
    CHECK(with.sum_rate == sum);
    for (const NomaPair& p : with.pairs) {
      REQUIRE(std::abs(p.alpha_weak + p.alpha_strong - 1.0) <= 1e-12);
      REQUIRE(p.alpha_weak >= p.alpha_strong);
    }
    // The IRS term never lowers a SINR.
    for (std::size_t i = 0; i < n; ++i) REQUIRE(without.users[i].sinr <= with.users[i].sinr);
    CHECK(with.pairs == evaluate_noma(gains_of(uav, irs), m).pairs);
  }
}

TEST_CASE("SINR is monotone in own IRS gain and partner power") {
  NomaPair pair;
  pair.weak_user = 0;
  pair.strong_user = 1;
  const std::vector<double> g{1e-11, 5e-11};
  double prev_irs = -1.0;
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> irs{1e-13 * i, 0.0};
    pair.alpha_weak = 0.6;
    pair.alpha_strong = 0.4;
    const double s = sinr(Role::kWeak, pair, g, irs, 1e11);
    CHECK(s >= prev_irs);
    prev_irs = s;
  }
  double prev_int = 1e300;
  for (int i = 0; i <= 50; ++i) {
    pair.alpha_strong = 0.01 * i;
    pair.alpha_weak = 0.6;
    const double s = sinr(Role::kWeak, pair, g, std::vector<double>{0.0, 0.0}, 1e11);
    CHECK(s <= prev_int);
    prev_int = s;
  }
}

TEST_CASE("no-IRS mode equals a zero reflection coefficient") {
  ScenarioConfig c;
  Rng rng(9);
  std::vector<Vec2> users;
  for (int i = 0; i < 10; ++i) users.push_back({rng.uniform(0, 500), rng.uniform(0, 500)});
  const channel::Placement p{{200, 240, 130}, {100, 90}};
  ScenarioConfig zero = c;
  zero.channel.irs_reflection_coeff = 0.0;
  const SlotResult none = slot_sum_rate(p, users, c, IrsMode::kNone);
  const SlotResult beta0 = slot_sum_rate(p, users, zero, IrsMode::kMobile);
  CHECK(none.sum_rate == beta0.sum_rate);
  CHECK(slot_sum_rate(p, users, c, IrsMode::kMobile).sum_rate >= none.sum_rate);
  CHECK(oma_slot_sum_rate(p, users, c, IrsMode::kNone).sum_rate ==
        oma_slot_sum_rate(p, users, zero).sum_rate);
}

TEST_CASE("rate model from config") {
  const RateModel m = rate_model(ScenarioConfig{});
  CHECK(m.rho == doctest::Approx(398107170553.49695).epsilon(1e-13));
  CHECK(m.snr_threshold == doctest::Approx(100.0));
  CHECK(m.ftpa_decay == 0.28);
}
