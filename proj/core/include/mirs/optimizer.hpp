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
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mirs/channel.hpp"
#include "mirs/genome.hpp"
#include "mirs/mobility.hpp"
#include "mirs/noma.hpp"
#include "mirs/rng.hpp"
#include "mirs/scenario.hpp"

// Genetic search over one slot's UAV and IRS-vehicle placement.
namespace mirs::ga {

enum class Access { kNoma, kOma };

/// What a candidate placement is scored against.
struct SlotObjective {
  Access access = Access::kNoma;
  noma::IrsMode irs = noma::IrsMode::kMobile;
  /// When set, replaces the genome's vehicle coordinates (static IRS).
  std::optional<Vec2> fixed_irs;
  /// Previous slot's placement, consulted only when ga.max_displacement > 0.
  std::optional<channel::Placement> previous;
};

struct GaRunRecord {
  std::vector<double> best_fitness;  // per generation, generation 0 = initial population
  std::vector<double> mean_fitness;
  PlacementGenome best;
  double best_value = 0.0;
  std::size_t evaluations = 0;
};

/// Decodes a genome and applies the objective's fixed vehicle position.
channel::Placement resolve(const PlacementGenome& genome, const SearchBox& box,
                           const SlotObjective& objective);

noma::SlotResult evaluate_placement(const channel::Placement& placement,
                                    std::span<const Vec2> users,
                                    const ScenarioConfig& config,
                                    const SlotObjective& objective);

/// sum_rate - penalty_weight * sum_i max(0, threshold - sinr_i), minus the
/// displacement penalty when a displacement limit is configured.
double penalized_fitness(const noma::SlotResult& result,
                         const channel::Placement& placement,
                         const ScenarioConfig& config, const SlotObjective& objective);

double fitness(const PlacementGenome& genome, std::span<const Vec2> users,
               const ScenarioConfig& config, const SlotObjective& objective = {});

PlacementGenome random_genome(unsigned bits_per_coordinate, Rng& rng);

/// Draws tournament_size distinct candidates (partial Fisher-Yates) and
/// returns the index of the fittest; ties go to the lowest index.
std::size_t tournament_select(std::span<const double> fitnesses, std::size_t tournament_size,
                              Rng& rng);

/// Single-point crossover. One uniform draw decides whether to cross; if so
/// a cut in [1, len - 1] is drawn and the suffixes are swapped.
std::pair<PlacementGenome, PlacementGenome> crossover(const PlacementGenome& a,
                                                      const PlacementGenome& b,
                                                      double crossover_prob, Rng& rng);

/// Bit-flip mutation: one uniform draw per bit, in bit order.
PlacementGenome mutate(PlacementGenome genome, double mutation_prob_per_bit, Rng& rng);

using FitnessFn = std::function<double(const PlacementGenome&)>;

/// Generational GA with elitism.
///
/// Each generation keeps the elitism_count fittest individuals unchanged and
/// fills the rest with offspring: two tournaments pick the parents, crossover
/// makes two children, each child is mutated. Fitness is evaluated after the
/// random draws for a generation are complete, so the random stream does not
/// depend on evaluation order.
GaRunRecord run_genetic_search(const GaParams& params, double mutation_prob_per_bit,
                               std::vector<PlacementGenome> initial_population,
                               const FitnessFn& fitness, Rng& rng);

struct SlotOptimum {
  channel::Placement placement;
  noma::SlotResult result;
  double fitness = 0.0;
  GaRunRecord record;
};

/// Runs the GA for one slot. The initial population is random except that
/// the first individual is the warm start, when given.
SlotOptimum optimize_slot(std::span<const Vec2> users, const ScenarioConfig& config,
                          const SlotObjective& objective, Rng& rng,
                          std::optional<channel::Placement> warm_start = std::nullopt);

enum class ScenarioKind { kMobileIrsNoma, kStaticIrsNoma, kNoIrsNoma, kMobileIrsOma };

inline constexpr ScenarioKind kAllScenarios[] = {
    ScenarioKind::kMobileIrsNoma, ScenarioKind::kStaticIrsNoma, ScenarioKind::kNoIrsNoma,
    ScenarioKind::kMobileIrsOma};

std::string_view scenario_name(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario(std::string_view name);

/// Optimizes every slot of a trace for one scenario.
///
/// Slot k draws from Rng(derive_seed(seed, streams::kGenetic, k)), so all
/// scenarios of a seed see the same random numbers. Mobile scenarios search
/// the UAV and vehicle jointly. The static scenario freezes the vehicle at
/// experiment.static_irs if configured, otherwise at the slot-1 joint
/// optimum. The no-IRS scenario zeroes the reflected path.
std::vector<SlotOptimum> optimize_trajectory(const mobility::MobilityTrace& trace,
                                             const ScenarioConfig& config,
                                             ScenarioKind kind, std::uint64_t seed);

}  // namespace mirs::ga
