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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mirs/channel.hpp"
#include "mirs/scenario.hpp"

namespace mirs::noma {

/// Two users sharing one sub-band. A singleton (odd user count) has no
/// strong user and keeps the whole sub-band power.
struct NomaPair {
  std::size_t weak_user = 0;
  std::optional<std::size_t> strong_user;
  double alpha_weak = 1.0;
  double alpha_strong = 0.0;

  bool singleton() const { return !strong_user.has_value(); }

  friend bool operator==(const NomaPair&, const NomaPair&) = default;
};

enum class Role { kWeak, kStrong };

/// Whether IRS gains come from the placement's vehicle position (mobile or
/// frozen static position) or are zeroed.
enum class IrsMode { kMobile, kStatic, kNone };

struct UserOutcome {
  std::size_t pair_id = 0;
  double alpha = 0.0;
  double sinr = 0.0;  // linear
  double rate = 0.0;  // bits/s/Hz
  bool feasible = false;
};

struct SlotResult {
  std::vector<UserOutcome> users;
  std::vector<NomaPair> pairs;
  double sum_rate = 0.0;

  std::size_t feasible_count() const;
  /// Sum over users of max(0, threshold - sinr), linear.
  double sinr_deficit(double threshold_linear) const;
};

/// Parameters of the rate computation, split out of the config so the
/// formulas can be driven directly.
struct RateModel {
  double rho = 1.0;
  double noise = 1.0;
  double ftpa_decay = 0.0;
  FtpaMode ftpa_mode = FtpaMode::kWeakerGetsMore;
  double snr_threshold = 1.0;  // linear
};

RateModel rate_model(const ScenarioConfig& config);

/// Sorts users by gain (ties by index) and pairs the k-th weakest with the
/// k-th strongest. With an odd count the median user is left as a singleton.
/// Power fractions are left at their defaults. Throws std::invalid_argument
/// on an empty list.
std::vector<NomaPair> pair_users(std::span<const double> gains);

struct PowerSplit {
  double weak = 0.5;
  double strong = 0.5;
};

/// Fractional transmit power allocation within a pair. In the default mode
/// each user's weight is (g / sigma^2)^(-decay), so the weaker channel gets
/// the larger share; kStrictEquation uses +decay. Throws std::domain_error
/// for non-positive gains or noise.
PowerSplit ftpa_allocate(double gain_weak, double gain_strong, double noise, double decay,
                         FtpaMode mode = FtpaMode::kWeakerGetsMore);

/// SIC SINR of one member of an allocated pair.
///   weak:   (a_w g_w + irs_w) / (a_s g_s + 1/rho)
///   strong: (a_s g_s + irs_s) / (1/rho)     (weak signal removed by SIC)
/// A singleton is served alone: (g + irs) / (1/rho).
double sinr(Role role, const NomaPair& pair, std::span<const double> gains,
            std::span<const double> irs_gains, double rho);

/// Pairs on the UAV-link gains, allocates power, and computes per-user
/// SINR and rate log2(1 + sinr).
SlotResult evaluate_noma(const channel::LinkGains& gains, const RateModel& model);

/// Orthogonal baseline: pair members split the sub-band in half, each with
/// the full sub-band power: rate = 0.5 log2(1 + (g + irs) rho). Singletons
/// keep the whole band.
SlotResult evaluate_oma(const channel::LinkGains& gains, const RateModel& model);

SlotResult slot_sum_rate(const channel::Placement& placement, std::span<const Vec2> users,
                         const ScenarioConfig& config, IrsMode mode);

SlotResult oma_slot_sum_rate(const channel::Placement& placement,
                             std::span<const Vec2> users, const ScenarioConfig& config,
                             IrsMode mode = IrsMode::kMobile);

}  // namespace mirs::noma
