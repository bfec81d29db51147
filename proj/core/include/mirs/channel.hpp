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

#include <span>
#include <vector>

#include "mirs/geometry.hpp"
#include "mirs/scenario.hpp"

// Air-to-ground and IRS-reflected link models. Pathlosses are in dB, gains
// are linear power ratios.
namespace mirs::channel {

/// UAV position (3D) and the IRS vehicle's ground position (2D). The IRS
/// elements sit at GaParams::irs_height above the vehicle.
struct Placement {
  Vec3 uav;
  Vec2 irs;

  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Per-user channel gains for one placement and one slot.
struct LinkGains {
  std::vector<double> uav_gain;  // |h_i|^2 after blockage-averaged pathloss
  std::vector<double> irs_gain;  // coherent N-element reflected gain, scaled by beta_refl

  std::size_t size() const { return uav_gain.size(); }
};

/// Everything the debug dump reports about a single user's links.
struct LinkDiagnostics {
  double distance = 0.0;             // UAV to user, 3D
  double horizontal_distance = 0.0;  // UAV ground projection to user
  double los_probability = 0.0;
  double pathloss_db = 0.0;
  double uav_gain = 0.0;
  double irs_distance = 0.0;         // IRS element plane to user, 3D
  double irs_gain = 0.0;
};

double distance_3d(Vec3 uav, Vec2 user);

/// a_L + 10 b_L log10(d). Throws std::domain_error for d <= 0.
double pathloss_los(double d, const ChannelParams& p);

/// a_N + 10 b_N log10(d). Throws std::domain_error for d <= 0.
double pathloss_nlos(double d, const ChannelParams& p);

/// Probability that the UAV-user ray is not blocked by a human body:
/// exp(-lambda g_B q h_B / z), clamped to (0, 1]. q is the horizontal
/// distance, z the UAV altitude. Throws std::domain_error for z <= 0 or q < 0.
double blockage_prob(double q, double z, const BlockageParams& b);

/// Elevation-angle sigmoid LoS probability, 1 / (1 + a exp(-b (theta - a))).
/// Available as an alternative to the blockage model via channel.los_model.
double sigmoid_los_prob(double q, double z, const ChannelParams& p);

/// LoS probability under the configured model.
double los_probability(Vec3 uav, Vec2 user, const ChannelParams& p,
                       const BlockageParams& b);

/// Blockage-averaged pathloss P_L L_LoS(d) + (1 - P_L) L_NLoS(d), dB.
double uav_link_pathloss(Vec3 uav, Vec2 user, const ChannelParams& p,
                         const BlockageParams& b);

/// Reflected-path gain through N elements under perfect phase alignment.
///
/// One element contributes g_e = 10^(-L_NLoS(d_irs,user)/10); coherent sums
/// of N equal amplitudes give N^2 g_e. With the UAV->IRS leg enabled the
/// result is also multiplied by 10^(-L_LoS(d_uav,irs)/10). The final value
/// is scaled by the reflection coefficient.
double irs_combined_gain(Vec2 irs_vehicle, Vec3 uav, Vec2 user, const ChannelParams& p,
                         double irs_height);

LinkGains compute_link_gains(const Placement& placement, std::span<const Vec2> users,
                             const ScenarioConfig& config, bool irs_enabled = true);

std::vector<LinkDiagnostics> inspect_links(const Placement& placement,
                                           std::span<const Vec2> users,
                                           const ScenarioConfig& config,
                                           bool irs_enabled = true);

}  // namespace mirs::channel
