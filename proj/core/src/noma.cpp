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

#include "mirs/noma.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mirs::noma {

std::size_t SlotResult::feasible_count() const {
  return static_cast<std::size_t>(
      std::count_if(users.begin(), users.end(), [](const UserOutcome& u) { return u.feasible; }));
}

double SlotResult::sinr_deficit(double threshold_linear) const {
  double deficit = 0.0;
  for (const auto& u : users) deficit += std::max(0.0, threshold_linear - u.sinr);
  return deficit;
}

RateModel rate_model(const ScenarioConfig& config) {
  const DerivedParams d = derive(config);
  RateModel m;
  m.rho = d.rho;
  m.noise = d.noise_mw;
  m.ftpa_decay = config.power.ftpa_decay;
  m.ftpa_mode = config.power.ftpa_mode;
  m.snr_threshold = d.snr_threshold_linear;
  return m;
}

std::vector<NomaPair> pair_users(std::span<const double> gains) {
  if (gains.empty()) throw std::invalid_argument("pair_users: no users");
  std::vector<std::size_t> order(gains.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (gains[a] != gains[b]) return gains[a] < gains[b];
    return a < b;
  });
  std::vector<NomaPair> pairs;
  pairs.reserve((order.size() + 1) / 2);
  std::size_t lo = 0;
  std::size_t hi = order.size() - 1;
  while (lo < hi) {
    NomaPair p;
    p.weak_user = order[lo++];
    p.strong_user = order[hi--];
    pairs.push_back(p);
  }
  if (lo == hi) {
    NomaPair p;
    p.weak_user = order[lo];
    pairs.push_back(p);
  }
  return pairs;
}

PowerSplit ftpa_allocate(double gain_weak, double gain_strong, double noise, double decay,
                         FtpaMode mode) {
  if (!(gain_weak > 0.0) || !(gain_strong > 0.0)) {
    throw std::domain_error("ftpa_allocate: gains must be > 0");
  }
  if (!(noise > 0.0)) throw std::domain_error("ftpa_allocate: noise must be > 0");
  // Normalized weights w_i = (g_i / noise)^e. With two users
  //   alpha_weak = 1 / (1 + w_strong / w_weak) = 1 / (1 + exp(e * ln(g_s / g_w)))
  // which is evaluated in the log domain so extreme gain ratios stay finite.
  const double exponent = mode == FtpaMode::kWeakerGetsMore ? -decay : decay;
  const double log_ratio = std::log(gain_strong / noise) - std::log(gain_weak / noise);
  PowerSplit split;
  split.weak = 1.0 / (1.0 + std::exp(exponent * log_ratio));
  split.strong = 1.0 - split.weak;
  return split;
}

double sinr(Role role, const NomaPair& pair, std::span<const double> gains,
            std::span<const double> irs_gains, double rho) {
  const double noise_term = 1.0 / rho;
  if (pair.singleton()) {
    const std::size_t u = pair.weak_user;
    return (pair.alpha_weak * gains[u] + irs_gains[u]) / noise_term;
  }
  const std::size_t w = pair.weak_user;
  const std::size_t s = *pair.strong_user;
  if (role == Role::kStrong) {
    return (pair.alpha_strong * gains[s] + irs_gains[s]) / noise_term;
  }
  return (pair.alpha_weak * gains[w] + irs_gains[w]) /
         (pair.alpha_strong * gains[s] + noise_term);
}

namespace {

void finish(SlotResult& result, double threshold) {
  result.sum_rate = 0.0;
  for (auto& u : result.users) {
    u.rate = std::log2(1.0 + u.sinr);
    u.feasible = u.sinr >= threshold;
    result.sum_rate += u.rate;
  }
}

}  // namespace

SlotResult evaluate_noma(const channel::LinkGains& gains, const RateModel& model) {
  SlotResult result;
  result.pairs = pair_users(gains.uav_gain);
  result.users.resize(gains.size());
  for (std::size_t k = 0; k < result.pairs.size(); ++k) {
    NomaPair& pair = result.pairs[k];
    if (pair.singleton()) {
      pair.alpha_weak = 1.0;
      pair.alpha_strong = 0.0;
      auto& u = result.users[pair.weak_user];
      u.pair_id = k;
      u.alpha = 1.0;
      u.sinr = sinr(Role::kWeak, pair, gains.uav_gain, gains.irs_gain, model.rho);
      continue;
    }
    const PowerSplit split =
        ftpa_allocate(gains.uav_gain[pair.weak_user], gains.uav_gain[*pair.strong_user],
                      model.noise, model.ftpa_decay, model.ftpa_mode);
    pair.alpha_weak = split.weak;
    pair.alpha_strong = split.strong;

    auto& weak = result.users[pair.weak_user];
    weak.pair_id = k;
    weak.alpha = split.weak;
    weak.sinr = sinr(Role::kWeak, pair, gains.uav_gain, gains.irs_gain, model.rho);

    auto& strong = result.users[*pair.strong_user];
    strong.pair_id = k;
    strong.alpha = split.strong;
    strong.sinr = sinr(Role::kStrong, pair, gains.uav_gain, gains.irs_gain, model.rho);
  }
  finish(result, model.snr_threshold);
  return result;
}

SlotResult evaluate_oma(const channel::LinkGains& gains, const RateModel& model) {
  SlotResult result;
  result.pairs = pair_users(gains.uav_gain);
  result.users.resize(gains.size());
  result.sum_rate = 0.0;
  for (std::size_t k = 0; k < result.pairs.size(); ++k) {
    NomaPair& pair = result.pairs[k];
    pair.alpha_weak = 1.0;
    pair.alpha_strong = pair.singleton() ? 0.0 : 1.0;
    const double share = pair.singleton() ? 1.0 : 0.5;
    auto serve = [&](std::size_t user) {
      auto& u = result.users[user];
      u.pair_id = k;
      u.alpha = 1.0;
      u.sinr = (gains.uav_gain[user] + gains.irs_gain[user]) * model.rho;
      u.rate = share * std::log2(1.0 + u.sinr);
      u.feasible = u.sinr >= model.snr_threshold;
      result.sum_rate += u.rate;
    };
    serve(pair.weak_user);
    if (pair.strong_user) serve(*pair.strong_user);
  }
  return result;
}

SlotResult slot_sum_rate(const channel::Placement& placement, std::span<const Vec2> users,
                         const ScenarioConfig& config, IrsMode mode) {
  const auto gains =
      channel::compute_link_gains(placement, users, config, mode != IrsMode::kNone);
  return evaluate_noma(gains, rate_model(config));
}

SlotResult oma_slot_sum_rate(const channel::Placement& placement,
                             std::span<const Vec2> users, const ScenarioConfig& config,
                             IrsMode mode) {
  const auto gains =
      channel::compute_link_gains(placement, users, config, mode != IrsMode::kNone);
  return evaluate_oma(gains, rate_model(config));
}

}  // namespace mirs::noma
