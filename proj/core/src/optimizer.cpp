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

#include "mirs/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mirs/units.hpp"

namespace mirs::ga {

channel::Placement resolve(const PlacementGenome& genome, const SearchBox& box,
                           const SlotObjective& objective) {
  channel::Placement p = decode(genome, box);
  if (objective.fixed_irs) p.irs = *objective.fixed_irs;
  return p;
}

noma::SlotResult evaluate_placement(const channel::Placement& placement,
                                    std::span<const Vec2> users,
                                    const ScenarioConfig& config,
                                    const SlotObjective& objective) {
  return objective.access == Access::kOma
             ? noma::oma_slot_sum_rate(placement, users, config, objective.irs)
             : noma::slot_sum_rate(placement, users, config, objective.irs);
}

double penalized_fitness(const noma::SlotResult& result,
                         const channel::Placement& placement,
                         const ScenarioConfig& config, const SlotObjective& objective) {
  const double threshold = units::db_to_linear(config.power.snr_threshold_db);
  double value = result.sum_rate - config.ga.penalty_weight * result.sinr_deficit(threshold);
  if (config.ga.max_displacement > 0.0 && objective.previous) {
    const auto& prev = *objective.previous;
    const double dx = placement.uav.x - prev.uav.x;
    const double dy = placement.uav.y - prev.uav.y;
    const double dz = placement.uav.z - prev.uav.z;
    const double uav_move = std::sqrt(dx * dx + dy * dy + dz * dz);
    const double irs_move = horizontal_distance(placement.irs, prev.irs);
    const double excess = std::max(0.0, uav_move - config.ga.max_displacement) +
                          std::max(0.0, irs_move - config.ga.max_displacement);
    value -= config.ga.displacement_penalty * excess;
  }
  return value;
}

double fitness(const PlacementGenome& genome, std::span<const Vec2> users,
               const ScenarioConfig& config, const SlotObjective& objective) {
  const channel::Placement p = resolve(genome, SearchBox::from_config(config), objective);
  return penalized_fitness(evaluate_placement(p, users, config, objective), p, config,
                           objective);
}

PlacementGenome random_genome(unsigned bits_per_coordinate, Rng& rng) {
  PlacementGenome g = PlacementGenome::zeros(bits_per_coordinate);
  for (std::size_t i = 0; i < g.size(); ++i) g.set_bit(i, rng.bernoulli(0.5));
  return g;
}

std::size_t tournament_select(std::span<const double> fitnesses, std::size_t tournament_size,
                              Rng& rng) {
  const std::size_t n = fitnesses.size();
  if (n == 0) throw std::invalid_argument("tournament_select: empty population");
  if (tournament_size < 1 || tournament_size > n) {
    throw std::invalid_argument("tournament_select: tournament size out of range");
  }
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::size_t winner = n;
  for (std::size_t i = 0; i < tournament_size; ++i) {
    const std::size_t j = i + rng.uniform_index(n - i);
    std::swap(pool[i], pool[j]);
    const std::size_t c = pool[i];
    if (winner == n || fitnesses[c] > fitnesses[winner] ||
        (fitnesses[c] == fitnesses[winner] && c < winner)) {
      winner = c;
    }
  }
  return winner;
}

std::pair<PlacementGenome, PlacementGenome> crossover(const PlacementGenome& a,
                                                      const PlacementGenome& b,
                                                      double crossover_prob, Rng& rng) {
  if (a.size() != b.size() || a.bits_per_coordinate() != b.bits_per_coordinate()) {
    throw std::invalid_argument("crossover: parents differ in length");
  }
  PlacementGenome c1 = a;
  PlacementGenome c2 = b;
  if (!rng.bernoulli(crossover_prob) || a.size() < 2) return {c1, c2};
  const std::size_t cut = 1 + rng.uniform_index(a.size() - 1);
  for (std::size_t i = cut; i < a.size(); ++i) {
    c1.set_bit(i, b.bit(i));
    c2.set_bit(i, a.bit(i));
  }
  return {c1, c2};
}

PlacementGenome mutate(PlacementGenome genome, double mutation_prob_per_bit, Rng& rng) {
  for (std::size_t i = 0; i < genome.size(); ++i) {
    if (rng.bernoulli(mutation_prob_per_bit)) genome.flip(i);
  }
  return genome;
}

namespace {

void record_generation(GaRunRecord& record, std::span<const double> fitnesses) {
  const double best = *std::max_element(fitnesses.begin(), fitnesses.end());
  const double sum = std::accumulate(fitnesses.begin(), fitnesses.end(), 0.0);
  record.best_fitness.push_back(best);
  record.mean_fitness.push_back(sum / static_cast<double>(fitnesses.size()));
}

}  // namespace

GaRunRecord run_genetic_search(const GaParams& params, double mutation_prob_per_bit,
                               std::vector<PlacementGenome> population,
                               const FitnessFn& fitness_fn, Rng& rng) {
  const auto pop_size = static_cast<std::size_t>(params.population_size);
  if (population.size() != pop_size) {
    throw std::invalid_argument("run_genetic_search: population size mismatch");
  }
  const auto elites = static_cast<std::size_t>(params.elitism_count);
  const auto tournament = static_cast<std::size_t>(params.tournament_size);

  GaRunRecord record;
  std::vector<double> fit(pop_size);
  for (std::size_t i = 0; i < pop_size; ++i) fit[i] = fitness_fn(population[i]);
  record.evaluations += pop_size;

  auto track_best = [&]() {
    for (std::size_t i = 0; i < pop_size; ++i) {
      if (record.best.size() == 0 || fit[i] > record.best_value) {
        record.best = population[i];
        record.best_value = fit[i];
      }
    }
  };
  track_best();
  record_generation(record, fit);

  std::vector<std::size_t> rank(pop_size);
  for (std::int64_t gen = 0; gen < params.max_iterations; ++gen) {
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::stable_sort(rank.begin(), rank.end(),
                     [&](std::size_t a, std::size_t b) { return fit[a] > fit[b]; });

    std::vector<PlacementGenome> next;
    std::vector<double> next_fit;
    next.reserve(pop_size);
    for (std::size_t e = 0; e < elites; ++e) {
      next.push_back(population[rank[e]]);
      next_fit.push_back(fit[rank[e]]);
    }
    while (next.size() < pop_size) {
      const auto& pa = population[tournament_select(fit, tournament, rng)];
      const auto& pb = population[tournament_select(fit, tournament, rng)];
      auto [c1, c2] = crossover(pa, pb, params.crossover_prob, rng);
      next.push_back(mutate(std::move(c1), mutation_prob_per_bit, rng));
      if (next.size() < pop_size) next.push_back(mutate(std::move(c2), mutation_prob_per_bit, rng));
    }
    for (std::size_t i = elites; i < pop_size; ++i) next_fit.push_back(fitness_fn(next[i]));
    record.evaluations += pop_size - elites;

    population = std::move(next);
    fit = std::move(next_fit);
    track_best();
    record_generation(record, fit);
  }
  return record;
}

SlotOptimum optimize_slot(std::span<const Vec2> users, const ScenarioConfig& config,
                          const SlotObjective& objective, Rng& rng,
                          std::optional<channel::Placement> warm_start) {
  const SearchBox box = SearchBox::from_config(config);
  const DerivedParams derived = derive(config);
  const auto bits = static_cast<unsigned>(config.ga.bits_per_coordinate);

  std::vector<PlacementGenome> population;
  population.reserve(static_cast<std::size_t>(config.ga.population_size));
  if (warm_start && box.contains(*warm_start)) {
    population.push_back(encode(*warm_start, box, bits));
  }
  while (population.size() < static_cast<std::size_t>(config.ga.population_size)) {
    population.push_back(random_genome(bits, rng));
  }

  const FitnessFn fn = [&](const PlacementGenome& g) {
    return fitness(g, users, config, objective);
  };
  SlotOptimum out;
  out.record = run_genetic_search(config.ga, derived.mutation_prob_per_bit,
                                  std::move(population), fn, rng);
  out.placement = resolve(out.record.best, box, objective);
  out.result = evaluate_placement(out.placement, users, config, objective);
  out.fitness = out.record.best_value;
  return out;
}

std::string_view scenario_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kMobileIrsNoma: return "M-IRS-NOMA";
    case ScenarioKind::kStaticIrsNoma: return "S-IRS-NOMA";
    case ScenarioKind::kNoIrsNoma: return "No-IRS-NOMA";
    case ScenarioKind::kMobileIrsOma: return "M-IRS-OMA";
  }
  return "?";
}

std::optional<ScenarioKind> parse_scenario(std::string_view name) {
  for (ScenarioKind k : kAllScenarios) {
    if (scenario_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

SlotObjective objective_for(ScenarioKind kind) {
  SlotObjective o;
  switch (kind) {
    case ScenarioKind::kMobileIrsNoma:
      break;
    case ScenarioKind::kStaticIrsNoma:
      o.irs = noma::IrsMode::kStatic;
      break;
    case ScenarioKind::kNoIrsNoma:
      o.irs = noma::IrsMode::kNone;
      break;
    case ScenarioKind::kMobileIrsOma:
      o.access = Access::kOma;
      break;
  }
  return o;
}

Rng slot_rng(std::uint64_t seed, std::size_t slot) {
  return Rng(derive_seed(seed, streams::kGenetic, slot));
}

}  // namespace

std::vector<SlotOptimum> optimize_trajectory(const mobility::MobilityTrace& trace,
                                             const ScenarioConfig& config,
                                             ScenarioKind kind, std::uint64_t seed) {
  std::vector<SlotOptimum> out;
  out.reserve(trace.num_slots());
  SlotObjective objective = objective_for(kind);
  std::optional<channel::Placement> previous;

  for (std::size_t slot = 0; slot < trace.num_slots(); ++slot) {
    Rng rng = slot_rng(seed, slot);
    objective.previous = previous;
    if (kind == ScenarioKind::kStaticIrsNoma && slot == 0) {
      if (config.experiment.static_irs) {
        objective.fixed_irs = config.experiment.static_irs;
      } else {
        // Slot 1 is the joint optimum; its vehicle position is then frozen.
        SlotObjective joint = objective_for(ScenarioKind::kMobileIrsNoma);
        out.push_back(optimize_slot(trace.slot(slot), config, joint, rng, previous));
        objective.fixed_irs = out.back().placement.irs;
        previous = out.back().placement;
        continue;
      }
    }
    out.push_back(optimize_slot(trace.slot(slot), config, objective, rng, previous));
    previous = out.back().placement;
  }
  return out;
}

}  // namespace mirs::ga
