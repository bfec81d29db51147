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

#include "mirs/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "mirs/units.hpp"

namespace mirs::channel {

double distance_3d(Vec3 uav, Vec2 user) {
  const double dx = uav.x - user.x;
  const double dy = uav.y - user.y;
  return std::sqrt(dx * dx + dy * dy + uav.z * uav.z);
}

double pathloss_los(double d, const ChannelParams& p) {
  if (!(d > 0.0)) throw std::domain_error("pathloss_los: distance must be > 0");
  return p.a_los + 10.0 * p.b_los * std::log10(d);
}

double pathloss_nlos(double d, const ChannelParams& p) {
  if (!(d > 0.0)) throw std::domain_error("pathloss_nlos: distance must be > 0");
  return p.a_nlos + 10.0 * p.b_nlos * std::log10(d);
}

double blockage_prob(double q, double z, const BlockageParams& b) {
  if (!(z > 0.0)) throw std::domain_error("blockage_prob: altitude must be > 0");
  if (!(q >= 0.0)) throw std::domain_error("blockage_prob: distance must be >= 0");
  const double p = std::exp(-b.density * b.diameter * q * b.height / z);
  return std::clamp(p, std::numeric_limits<double>::min(), 1.0);
}

double sigmoid_los_prob(double q, double z, const ChannelParams& p) {
  if (!(z > 0.0)) throw std::domain_error("sigmoid_los_prob: altitude must be > 0");
  const double theta_deg = std::atan2(z, q) * 180.0 / std::numbers::pi;
  const double prob =
      1.0 / (1.0 + p.sigmoid_a * std::exp(-p.sigmoid_b * (theta_deg - p.sigmoid_a)));
  return std::clamp(prob, std::numeric_limits<double>::min(), 1.0);
}

double los_probability(Vec3 uav, Vec2 user, const ChannelParams& p,
                       const BlockageParams& b) {
  const double q = horizontal_distance({uav.x, uav.y}, user);
  switch (p.los_model) {
    case LosModel::kElevationSigmoid:
      return sigmoid_los_prob(q, uav.z, p);
    case LosModel::kHumanBlockage:
      break;
  }
  return blockage_prob(q, uav.z, b);
}

double uav_link_pathloss(Vec3 uav, Vec2 user, const ChannelParams& p,
                         const BlockageParams& b) {
  const double d = distance_3d(uav, user);
  const double p_los = los_probability(uav, user, p, b);
  const double p_nlos = 1.0 - p_los;
  return p_los * pathloss_los(d, p) + p_nlos * pathloss_nlos(d, p);
}

double irs_combined_gain(Vec2 irs_vehicle, Vec3 uav, Vec2 user, const ChannelParams& p,
                         double irs_height) {
  const Vec3 element{irs_vehicle.x, irs_vehicle.y, irs_height};
  const double d_user = distance_3d(element, user);
  const double per_element = units::db_to_linear(-pathloss_nlos(d_user, p));
  const double n = static_cast<double>(p.irs_elements_per_user);
  double gain = p.irs_reflection_coeff * (n * n) * per_element;
  if (p.irs_uav_leg_enabled) {
    const double dx = uav.x - element.x;
    const double dy = uav.y - element.y;
    const double dz = uav.z - element.z;
    const double d_leg = std::sqrt(dx * dx + dy * dy + dz * dz);
    gain *= units::db_to_linear(-pathloss_los(d_leg, p));
  }
  return gain;
}

LinkGains compute_link_gains(const Placement& placement, std::span<const Vec2> users,
                             const ScenarioConfig& config, bool irs_enabled) {
  LinkGains gains;
  gains.uav_gain.reserve(users.size());
  gains.irs_gain.reserve(users.size());
  for (const Vec2& user : users) {
    const double loss =
        uav_link_pathloss(placement.uav, user, config.channel, config.blockage);
    gains.uav_gain.push_back(units::db_to_linear(-loss));
    gains.irs_gain.push_back(irs_enabled ? irs_combined_gain(placement.irs, placement.uav,
                                                             user, config.channel,
                                                             config.ga.irs_height)
                                         : 0.0);
  }
  return gains;
}

std::vector<LinkDiagnostics> inspect_links(const Placement& placement,
                                           std::span<const Vec2> users,
                                           const ScenarioConfig& config,
                                           bool irs_enabled) {
  const LinkGains gains = compute_link_gains(placement, users, config, irs_enabled);
  std::vector<LinkDiagnostics> out;
  out.reserve(users.size());
  const Vec3 element{placement.irs.x, placement.irs.y, config.ga.irs_height};
  for (std::size_t i = 0; i < users.size(); ++i) {
    LinkDiagnostics d;
    d.distance = distance_3d(placement.uav, users[i]);
    d.horizontal_distance = horizontal_distance({placement.uav.x, placement.uav.y}, users[i]);
    d.los_probability =
        los_probability(placement.uav, users[i], config.channel, config.blockage);
    d.pathloss_db =
        uav_link_pathloss(placement.uav, users[i], config.channel, config.blockage);
    d.uav_gain = gains.uav_gain[i];
    d.irs_distance = distance_3d(element, users[i]);
    d.irs_gain = gains.irs_gain[i];
    out.push_back(d);
  }
  return out;
}

}  // namespace mirs::channel
