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

#include "mirs/experiment.hpp"

#include <algorithm>
#include <stdexcept>

namespace mirs::experiment {

using ga::ScenarioKind;

std::optional<std::size_t> ExperimentReport::scenario_index(ScenarioKind kind) const {
  const auto it = std::find(scenarios.begin(), scenarios.end(), kind);
  if (it == scenarios.end()) return std::nullopt;
  return static_cast<std::size_t>(it - scenarios.begin());
}

double improvement_pct(double subject, double baseline) {
  return 100.0 * (subject - baseline) / baseline;
}

std::vector<std::uint64_t> seed_list(std::uint64_t first, std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::size_t i = 0; i < count; ++i) seeds[i] = first + i;
  return seeds;
}

namespace {

constexpr std::pair<ScenarioKind, ScenarioKind> kComparisons[] = {
    {ScenarioKind::kMobileIrsNoma, ScenarioKind::kStaticIrsNoma},
    {ScenarioKind::kMobileIrsNoma, ScenarioKind::kNoIrsNoma},
    {ScenarioKind::kStaticIrsNoma, ScenarioKind::kNoIrsNoma},
    {ScenarioKind::kMobileIrsNoma, ScenarioKind::kMobileIrsOma},
};

std::vector<ScenarioKind> canonical(const std::vector<ScenarioKind>& requested) {
  std::vector<ScenarioKind> out;
  for (ScenarioKind k : ga::kAllScenarios) {
    if (std::find(requested.begin(), requested.end(), k) != requested.end()) out.push_back(k);
  }
  return out;
}

void check_trace(const mobility::MobilityTrace& trace, const ScenarioConfig& config) {
  if (trace.num_slots() == 0 || trace.num_users() == 0) {
    throw std::invalid_argument("run_experiment: empty trace");
  }
  for (std::size_t s = 0; s < trace.num_slots(); ++s) {
    for (const Vec2& p : trace.slot(s)) {
      if (!config.region.contains(p)) {
        throw std::invalid_argument("run_experiment: trace position outside region");
      }
    }
  }
}

}  // namespace

ExperimentReport run_experiment(const ScenarioConfig& config,
                                const std::vector<ScenarioKind>& scenarios,
                                const std::vector<std::uint64_t>& seeds,
                                const mobility::MobilityTrace* trace_override) {
  if (scenarios.empty()) throw std::invalid_argument("run_experiment: no scenarios");
  if (seeds.empty()) throw std::invalid_argument("run_experiment: no seeds");
  if (trace_override) check_trace(*trace_override, config);

  ExperimentReport report;
  report.config = config;
  report.seeds = seeds;
  report.scenarios = canonical(scenarios);
  report.num_slots = trace_override ? trace_override->num_slots()
                                    : static_cast<std::size_t>(config.mobility.num_slots);

  for (std::uint64_t seed : seeds) {
    SeedRun run;
    run.seed = seed;
    if (trace_override) {
      run.trace = *trace_override;
    } else {
      Rng rng(derive_seed(seed, streams::kMobility));
      run.trace = mobility::generate_trace(config, rng);
    }
    for (ScenarioKind kind : report.scenarios) {
      run.scenarios.push_back({kind, ga::optimize_trajectory(run.trace, config, kind, seed)});
    }
    report.runs.push_back(std::move(run));
  }

  const double n_seeds = static_cast<double>(seeds.size());
  report.mean_sum_rate.assign(report.scenarios.size(),
                              std::vector<double>(report.num_slots, 0.0));
  for (const SeedRun& run : report.runs) {
    for (std::size_t k = 0; k < run.scenarios.size(); ++k) {
      for (std::size_t s = 0; s < report.num_slots; ++s) {
        const auto& slot = run.scenarios[k].slots[s];
        report.mean_sum_rate[k][s] += slot.result.sum_rate;
        if (slot.result.feasible_count() == 0) {
          report.infeasible.push_back({run.seed, run.scenarios[k].kind, s});
        }
      }
    }
  }
  for (auto& row : report.mean_sum_rate) {
    for (double& v : row) v /= n_seeds;
  }

  for (const auto& [subject, baseline] : kComparisons) {
    const auto a = report.scenario_index(subject);
    const auto b = report.scenario_index(baseline);
    if (!a || !b) continue;
    Improvement imp;
    imp.subject = subject;
    imp.baseline = baseline;
    double sum = 0.0;
    for (std::size_t s = 0; s < report.num_slots; ++s) {
      imp.per_slot_pct.push_back(
          improvement_pct(report.mean_sum_rate[*a][s], report.mean_sum_rate[*b][s]));
      sum += imp.per_slot_pct.back();
    }
    imp.mean_pct = sum / static_cast<double>(report.num_slots);
    report.improvements.push_back(std::move(imp));
  }

  for (ScenarioKind k : report.scenarios) {
    if (k != ScenarioKind::kMobileIrsOma) {
      report.fractions_scenario = k;
      break;
    }
  }
  if (report.fractions_scenario) {
    const std::size_t k = *report.scenario_index(*report.fractions_scenario);
    for (std::size_t s = 0; s < report.num_slots; ++s) {
      const std::size_t num_pairs = report.runs.front().scenarios[k].slots[s].result.pairs.size();
      for (std::size_t p = 0; p < num_pairs; ++p) {
        PairFraction f;
        f.slot = s;
        f.pair = p;
        for (const SeedRun& run : report.runs) {
          const auto& pair = run.scenarios[k].slots[s].result.pairs[p];
          f.alpha_weak += pair.alpha_weak;
          f.alpha_strong += pair.alpha_strong;
        }
        f.alpha_weak /= n_seeds;
        f.alpha_strong /= n_seeds;
        report.fractions.push_back(f);
      }
    }
  }
  return report;
}

}  // namespace mirs::experiment
