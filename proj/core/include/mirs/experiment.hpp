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
#include <vector>

#include "mirs/mobility.hpp"
#include "mirs/optimizer.hpp"
#include "mirs/scenario.hpp"

// Multi-seed comparison of the scenario variants.
namespace mirs::experiment {

struct ScenarioRun {
  ga::ScenarioKind kind = ga::ScenarioKind::kMobileIrsNoma;
  std::vector<ga::SlotOptimum> slots;
};

struct SeedRun {
  std::uint64_t seed = 0;
  mobility::MobilityTrace trace;
  std::vector<ScenarioRun> scenarios;  // same order as ExperimentReport::scenarios
};

/// 100 (rate_subject - rate_baseline) / rate_baseline, per slot, from the
/// report's seed-averaged rates. mean_pct is the mean of per_slot_pct.
struct Improvement {
  ga::ScenarioKind subject = ga::ScenarioKind::kMobileIrsNoma;
  ga::ScenarioKind baseline = ga::ScenarioKind::kNoIrsNoma;
  std::vector<double> per_slot_pct;
  double mean_pct = 0.0;
};

/// Power split of the pair with rank `pair` (0 = largest gain disparity),
/// averaged over seeds.
struct PairFraction {
  std::size_t slot = 0;
  std::size_t pair = 0;
  double alpha_weak = 0.0;
  double alpha_strong = 0.0;
};

/// A (seed, scenario, slot) whose chosen placement leaves every user below
/// the SINR threshold.
struct InfeasibleCell {
  std::uint64_t seed = 0;
  ga::ScenarioKind kind = ga::ScenarioKind::kMobileIrsNoma;
  std::size_t slot = 0;
};

struct ExperimentReport {
  ScenarioConfig config;
  std::vector<std::uint64_t> seeds;
  std::vector<ga::ScenarioKind> scenarios;
  std::size_t num_slots = 0;
  std::vector<std::vector<double>> mean_sum_rate;  // [scenario][slot]
  std::vector<Improvement> improvements;
  std::optional<ga::ScenarioKind> fractions_scenario;
  std::vector<PairFraction> fractions;
  std::vector<SeedRun> runs;
  std::vector<InfeasibleCell> infeasible;

  /// Index of `kind` in `scenarios`, if present.
  std::optional<std::size_t> scenario_index(ga::ScenarioKind kind) const;
};

double improvement_pct(double subject, double baseline);

/// `count` consecutive seeds starting at `first`.
std::vector<std::uint64_t> seed_list(std::uint64_t first, std::size_t count);

/// For each seed: one mobility trace (or `trace_override`), then every
/// requested scenario optimized over it. Scenarios are reordered into the
/// canonical order and de-duplicated. Throws std::invalid_argument for an
/// empty scenario or seed list, or an override trace outside the region.
ExperimentReport run_experiment(const ScenarioConfig& config,
                                const std::vector<ga::ScenarioKind>& scenarios,
                                const std::vector<std::uint64_t>& seeds,
                                const mobility::MobilityTrace* trace_override = nullptr);

}  // namespace mirs::experiment
