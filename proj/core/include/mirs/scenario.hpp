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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "mirs/geometry.hpp"

namespace mirs {

/// Thrown for malformed configuration documents and for parameter values that
/// break a model invariant. `key()` names the offending field using the
/// dotted document path (e.g. "mobility.speed_min").
class ConfigError : public std::runtime_error {
 public:
  enum class Kind { kSchema, kValidation };

  ConfigError(Kind kind, std::string key, const std::string& message,
              std::optional<int> line = std::nullopt);

  Kind kind() const { return kind_; }
  const std::string& key() const { return key_; }
  std::optional<int> line() const { return line_; }

 private:
  Kind kind_;
  std::string key_;
  std::optional<int> line_;
};

enum class LosModel {
  kHumanBlockage,    // exp(-lambda * g_B * q * h_B / z)
  kElevationSigmoid  // 1 / (1 + a exp(-b (theta - a))), theta in degrees
};

struct ChannelParams {
  double a_los = 61.4;   // dB at 1 m
  double b_los = 2.0;
  double a_nlos = 72.0;  // dB at 1 m
  double b_nlos = 2.92;
  double carrier_freq_hz = 28e9;
  std::int64_t irs_elements_per_user = 131072;
  double irs_reflection_coeff = 1.0;
  bool irs_uav_leg_enabled = true;
  LosModel los_model = LosModel::kHumanBlockage;
  double sigmoid_a = 9.6;
  double sigmoid_b = 0.28;

  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

struct BlockageParams {
  double density = 0.01;  // blockers per m^2
  double diameter = 0.4;  // m
  double height = 1.7;    // m

  friend bool operator==(const BlockageParams&, const BlockageParams&) = default;
};

enum class FtpaMode {
  kWeakerGetsMore,   // exponent -beta
  kStrictEquation,   // exponent +beta, as the allocation formula is usually printed
};

struct PowerParams {
  double uav_tx_power_dbm = 36.0;
  double noise_power_dbm = -80.0;
  double snr_threshold_db = 20.0;
  double ftpa_decay = 0.28;
  FtpaMode ftpa_mode = FtpaMode::kWeakerGetsMore;

  friend bool operator==(const PowerParams&, const PowerParams&) = default;
};

struct MobilityParams {
  double speed_min = 0.5;  // m/s
  double speed_max = 1.5;  // m/s
  double pause_duration = 0.0;
  double slot_duration = 300.0;
  std::int64_t num_slots = 5;
  double substep = 1.0;
  Region initial_subregion{0.0, 0.0, 50.0, 50.0};

  friend bool operator==(const MobilityParams&, const MobilityParams&) = default;
};

struct GaParams {
  std::int64_t population_size = 50;
  std::int64_t max_iterations = 50;
  std::int64_t tournament_size = 3;
  double crossover_prob = 0.9;
  /// Unset means 1 / genome length.
  std::optional<double> mutation_prob_per_bit;
  std::int64_t bits_per_coordinate = 12;
  std::int64_t elitism_count = 2;
  double uav_alt_min = 100.0;
  double uav_alt_max = 300.0;
  double irs_height = 6.0;
  /// Fitness units (bits/s/Hz) per unit of linear SINR below threshold.
  double penalty_weight = 10.0;
  /// Per-slot displacement limit for UAV and vehicle, meters; 0 disables it.
  double max_displacement = 0.0;
  /// Fitness units per meter beyond max_displacement.
  double displacement_penalty = 1.0;

  friend bool operator==(const GaParams&, const GaParams&) = default;
};

struct ExperimentParams {
  std::int64_t num_seeds = 20;
  /// Overrides the frozen vehicle position of the static-IRS scenario.
  std::optional<Vec2> static_irs;

  friend bool operator==(const ExperimentParams&, const ExperimentParams&) = default;
};

/// Every tunable of a run. Immutable once loaded and validated.
struct ScenarioConfig {
  std::uint64_t seed = 1;
  std::int64_t num_users = 10;
  Region region{};
  ChannelParams channel{};
  BlockageParams blockage{};
  PowerParams power{};
  MobilityParams mobility{};
  GaParams ga{};
  ExperimentParams experiment{};

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Quantities computed once from a validated config.
struct DerivedParams {
  double rho = 0.0;                 // transmit SNR P / sigma^2, linear
  double noise_mw = 0.0;
  double snr_threshold_linear = 0.0;
  std::size_t genome_length = 0;
  double mutation_prob_per_bit = 0.0;
  std::int64_t substeps_per_slot = 0;
};

/// Throws ConfigError(kValidation) naming the first field that breaks an
/// invariant.
void validate(const ScenarioConfig& config);

DerivedParams derive(const ScenarioConfig& config);

}  // namespace mirs
