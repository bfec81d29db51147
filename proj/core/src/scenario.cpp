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

#include "mirs/scenario.hpp"

#include <cmath>

#include <fmt/format.h>

#include "mirs/units.hpp"

namespace mirs {

ConfigError::ConfigError(Kind kind, std::string key, const std::string& message,
                         std::optional<int> line)
    : std::runtime_error(
          line ? fmt::format("{} (key '{}', line {})", message, key, *line)
               : fmt::format("{} (key '{}')", message, key)),
      kind_(kind),
      key_(std::move(key)),
      line_(line) {}

namespace {

void require(bool ok, const char* key, const char* what) {
  if (!ok) {
    throw ConfigError(ConfigError::Kind::kValidation, key, what);
  }
}

bool finite(double v) { return std::isfinite(v); }

bool unit_interval(double v) { return finite(v) && v >= 0.0 && v <= 1.0; }

void validate_region(const Region& r, const char* key) {
  require(finite(r.x_min) && finite(r.x_max) && finite(r.y_min) && finite(r.y_max),
          key, "region bounds must be finite");
  require(r.x_max > r.x_min && r.y_max > r.y_min, key,
          "region must satisfy x_max > x_min and y_max > y_min");
}

}  // namespace

void validate(const ScenarioConfig& c) {
  require(c.num_users >= 1, "num_users", "at least one user is required");
  validate_region(c.region, "region");

  const ChannelParams& ch = c.channel;
  require(finite(ch.a_los) && finite(ch.a_nlos), "channel",
          "pathloss intercepts must be finite");
  require(finite(ch.b_los) && ch.b_los > 0.0, "channel.b_los", "must be > 0");
  require(finite(ch.b_nlos) && ch.b_nlos > 0.0, "channel.b_nlos", "must be > 0");
  require(ch.b_nlos >= ch.b_los, "channel.b_nlos", "must be >= channel.b_los");
  require(finite(ch.carrier_freq_hz) && ch.carrier_freq_hz > 0.0,
          "channel.carrier_freq_hz", "must be > 0");
  require(ch.irs_elements_per_user >= 1, "channel.irs_elements_per_user",
          "must be >= 1");
  require(unit_interval(ch.irs_reflection_coeff), "channel.irs_reflection_coeff",
          "must lie in [0, 1]");
  require(finite(ch.sigmoid_a) && ch.sigmoid_a > 0.0, "channel.sigmoid_a",
          "must be > 0");
  require(finite(ch.sigmoid_b) && ch.sigmoid_b > 0.0, "channel.sigmoid_b",
          "must be > 0");

  const BlockageParams& b = c.blockage;
  require(finite(b.density) && b.density > 0.0, "blockage.density", "must be > 0");
  require(finite(b.diameter) && b.diameter > 0.0, "blockage.diameter", "must be > 0");
  require(finite(b.height) && b.height > 0.0, "blockage.height", "must be > 0");

  const PowerParams& p = c.power;
  require(finite(p.uav_tx_power_dbm), "power.uav_tx_power_dbm", "must be finite");
  require(finite(p.noise_power_dbm), "power.noise_power_dbm", "must be finite");
  require(finite(p.snr_threshold_db), "power.snr_threshold_db", "must be finite");
  require(std::isfinite(units::db_to_linear(p.uav_tx_power_dbm - p.noise_power_dbm)),
          "power", "transmit SNR overflows");
  require(unit_interval(p.ftpa_decay), "power.ftpa_decay", "must lie in [0, 1]");

  const MobilityParams& m = c.mobility;
  require(finite(m.speed_min) && m.speed_min >= 0.0, "mobility.speed_min",
          "must be >= 0");
  require(finite(m.speed_max) && m.speed_min <= m.speed_max, "mobility",
          "MobilityParams requires speed_min <= speed_max");
  require(finite(m.pause_duration) && m.pause_duration >= 0.0,
          "mobility.pause_duration", "must be >= 0");
  require(m.num_slots >= 1, "mobility.num_slots", "must be >= 1");
  require(finite(m.slot_duration) && m.slot_duration > 0.0,
          "mobility.slot_duration", "must be > 0");
  require(finite(m.substep) && m.substep > 0.0 && m.substep <= m.slot_duration,
          "mobility.substep", "must lie in (0, slot_duration]");
  const double steps = m.slot_duration / m.substep;
  require(std::abs(steps - std::round(steps)) <= 1e-9 * steps, "mobility.substep",
          "slot_duration must be an integer multiple of substep");
  require(finite(m.initial_subregion.x_min) && finite(m.initial_subregion.x_max) &&
              finite(m.initial_subregion.y_min) && finite(m.initial_subregion.y_max) &&
              m.initial_subregion.x_max >= m.initial_subregion.x_min &&
              m.initial_subregion.y_max >= m.initial_subregion.y_min,
          "mobility.initial_subregion", "bounds must be ordered");
  require(c.region.contains(m.initial_subregion), "mobility.initial_subregion",
          "must lie inside region");

  const GaParams& g = c.ga;
  require(g.population_size >= 2, "ga.population_size", "must be >= 2");
  require(g.max_iterations >= 1, "ga.max_iterations", "must be >= 1");
  require(g.tournament_size >= 1 && g.tournament_size <= g.population_size,
          "ga.tournament_size", "must lie in [1, population_size]");
  require(unit_interval(g.crossover_prob), "ga.crossover_prob", "must lie in [0, 1]");
  if (g.mutation_prob_per_bit) {
    require(unit_interval(*g.mutation_prob_per_bit), "ga.mutation_prob_per_bit",
            "must lie in [0, 1]");
  }
  require(g.bits_per_coordinate >= 1 && g.bits_per_coordinate <= 30,
          "ga.bits_per_coordinate", "must lie in [1, 30]");
  require(g.elitism_count >= 0 && g.elitism_count < g.population_size,
          "ga.elitism_count", "must lie in [0, population_size)");
  require(finite(g.uav_alt_min) && g.uav_alt_min >= 100.0, "ga.uav_alt_min",
          "minimum UAV altitude is 100 m");
  require(finite(g.uav_alt_max) && g.uav_alt_max >= g.uav_alt_min, "ga.uav_alt_max",
          "must be >= ga.uav_alt_min");
  require(finite(g.irs_height) && g.irs_height > 0.0 && g.irs_height < g.uav_alt_min,
          "ga.irs_height", "must lie in (0, uav_alt_min)");
  require(finite(g.penalty_weight) && g.penalty_weight >= 0.0, "ga.penalty_weight",
          "must be >= 0");
  require(finite(g.max_displacement) && g.max_displacement >= 0.0,
          "ga.max_displacement", "must be >= 0");
  require(finite(g.displacement_penalty) && g.displacement_penalty >= 0.0,
          "ga.displacement_penalty", "must be >= 0");

  require(c.experiment.num_seeds >= 1, "experiment.num_seeds", "must be >= 1");
  if (c.experiment.static_irs) {
    require(c.region.contains(*c.experiment.static_irs), "experiment.static_irs",
            "must lie inside region");
  }
}

DerivedParams derive(const ScenarioConfig& c) {
  DerivedParams d;
  d.rho = units::db_to_linear(c.power.uav_tx_power_dbm - c.power.noise_power_dbm);
  d.noise_mw = units::dbm_to_milliwatts(c.power.noise_power_dbm);
  d.snr_threshold_linear = units::db_to_linear(c.power.snr_threshold_db);
  d.genome_length = 5 * static_cast<std::size_t>(c.ga.bits_per_coordinate);
  d.mutation_prob_per_bit = c.ga.mutation_prob_per_bit.value_or(
      1.0 / static_cast<double>(d.genome_length));
  d.substeps_per_slot =
      static_cast<std::int64_t>(std::llround(c.mobility.slot_duration / c.mobility.substep));
  return d;
}

}  // namespace mirs
