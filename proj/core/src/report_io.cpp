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

#include "mirs/report_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "mirs/config_io.hpp"
#include "mirs/units.hpp"

namespace mirs::experiment {

namespace {

using nlohmann::json;

// JSON has no NaN or infinity; such values are written as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string name(ga::ScenarioKind k) { return std::string(ga::scenario_name(k)); }

json slot_to_json(std::size_t slot, const ga::SlotOptimum& opt) {
  json users = json::array();
  for (const auto& u : opt.result.users) {
    users.push_back({{"pair_id", u.pair_id},
                     {"alpha", number(u.alpha)},
                     {"sinr", number(u.sinr)},
                     {"rate", number(u.rate)},
                     {"feasible", u.feasible}});
  }
  json pairs = json::array();
  for (const auto& p : opt.result.pairs) {
    pairs.push_back({{"weak_user", p.weak_user},
                     {"strong_user", p.strong_user ? json(*p.strong_user) : json(nullptr)},
                     {"alpha_weak", number(p.alpha_weak)},
                     {"alpha_strong", number(p.alpha_strong)}});
  }
  json best = json::array();
  json mean = json::array();
  for (double v : opt.record.best_fitness) best.push_back(number(v));
  for (double v : opt.record.mean_fitness) mean.push_back(number(v));
  return {{"slot", slot + 1},
          {"uav", {opt.placement.uav.x, opt.placement.uav.y, opt.placement.uav.z}},
          {"irs", {opt.placement.irs.x, opt.placement.irs.y}},
          {"sum_rate", number(opt.result.sum_rate)},
          {"fitness", number(opt.fitness)},
          {"feasible_users", opt.result.feasible_count()},
          {"evaluations", opt.record.evaluations},
          {"best_genome", opt.record.best.to_string()},
          {"users", users},
          {"pairs", pairs},
          {"convergence", {{"best_fitness", best}, {"mean_fitness", mean}}}};
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path.string()));
  return out;
}

template <class Fn>
void write_file(const std::filesystem::path& path, Fn&& fn) {
  std::ofstream out = open_output(path);
  fn(out);
  out.flush();
  if (!out) throw std::runtime_error(fmt::format("failed writing '{}'", path.string()));
}

}  // namespace

json report_to_json(const ExperimentReport& r) {
  json doc;
  doc["config"] = config_to_json(r.config);
  doc["seeds"] = r.seeds;
  json scenarios = json::array();
  for (auto k : r.scenarios) scenarios.push_back(name(k));
  doc["scenarios"] = scenarios;
  doc["num_slots"] = r.num_slots;

  json rates = json::object();
  for (std::size_t k = 0; k < r.scenarios.size(); ++k) {
    json row = json::array();
    for (double v : r.mean_sum_rate[k]) row.push_back(number(v));
    rates[name(r.scenarios[k])] = row;
  }
  doc["average_sum_rate"] = rates;

  json improvements = json::array();
  for (const auto& imp : r.improvements) {
    json per_slot = json::array();
    for (double v : imp.per_slot_pct) per_slot.push_back(number(v));
    improvements.push_back({{"subject", name(imp.subject)},
                            {"baseline", name(imp.baseline)},
                            {"per_slot_pct", per_slot},
                            {"mean_pct", number(imp.mean_pct)}});
  }
  doc["improvements"] = improvements;

  json fractions = json::array();
  for (const auto& f : r.fractions) {
    fractions.push_back({{"slot", f.slot + 1},
                         {"pair", f.pair},
                         {"alpha_weak", number(f.alpha_weak)},
                         {"alpha_strong", number(f.alpha_strong)}});
  }
  doc["power_fractions"] = {
      {"scenario", r.fractions_scenario ? json(name(*r.fractions_scenario)) : json(nullptr)},
      {"rows", fractions}};

  json infeasible = json::array();
  for (const auto& c : r.infeasible) {
    infeasible.push_back({{"seed", c.seed}, {"scenario", name(c.kind)}, {"slot", c.slot + 1}});
  }
  doc["infeasible"] = infeasible;

  json runs = json::array();
  for (const auto& run : r.runs) {
    json trace = json::array();
    for (std::size_t s = 0; s < run.trace.num_slots(); ++s) {
      json slot = json::array();
      for (const Vec2& p : run.trace.slot(s)) slot.push_back({p.x, p.y});
      trace.push_back(slot);
    }
    json scen = json::array();
    for (const auto& sr : run.scenarios) {
      json slots = json::array();
      for (std::size_t s = 0; s < sr.slots.size(); ++s) slots.push_back(slot_to_json(s, sr.slots[s]));
      scen.push_back({{"name", name(sr.kind)}, {"slots", slots}});
    }
    runs.push_back({{"seed", run.seed}, {"trace", trace}, {"scenarios", scen}});
  }
  doc["runs"] = runs;
  return doc;
}

void write_rates_csv(std::ostream& out, const ExperimentReport& r) {
  out << "slot,scenario,sum_rate\n";
  for (std::size_t s = 0; s < r.num_slots; ++s) {
    for (std::size_t k = 0; k < r.scenarios.size(); ++k) {
      out << fmt::format("{},{},{}\n", s + 1, ga::scenario_name(r.scenarios[k]),
                         r.mean_sum_rate[k][s]);
    }
  }
}

void write_fractions_csv(std::ostream& out, const ExperimentReport& r) {
  out << "slot,pair,alpha_weak,alpha_strong\n";
  for (const auto& f : r.fractions) {
    out << fmt::format("{},{},{},{}\n", f.slot + 1, f.pair, f.alpha_weak, f.alpha_strong);
  }
}

void write_trajectory_csv(std::ostream& out, const ExperimentReport& r) {
  out << "slot,entity,x,y,z\n";
  if (r.runs.empty()) return;
  const SeedRun& run = r.runs.front();
  for (const auto& sr : run.scenarios) {
    const auto scenario = ga::scenario_name(sr.kind);
    for (std::size_t s = 0; s < sr.slots.size(); ++s) {
      const auto& p = sr.slots[s].placement;
      out << fmt::format("{},{}/uav,{},{},{}\n", s + 1, scenario, p.uav.x, p.uav.y, p.uav.z);
      out << fmt::format("{},{}/irs,{},{},{}\n", s + 1, scenario, p.irs.x, p.irs.y,
                         r.config.ga.irs_height);
    }
  }
}

void write_convergence_csv(std::ostream& out, const ga::GaRunRecord& record) {
  out << "generation,best_fitness,mean_fitness\n";
  for (std::size_t g = 0; g < record.best_fitness.size(); ++g) {
    out << fmt::format("{},{},{}\n", g, record.best_fitness[g], record.mean_fitness[g]);
  }
}

void write_convergence_csv(std::ostream& out, const ExperimentReport& r) {
  if (r.runs.empty() || r.scenarios.empty() || r.num_slots == 0) {
    write_convergence_csv(out, ga::GaRunRecord{});
    return;
  }
  ga::GaRunRecord avg;
  const std::size_t gens = r.runs.front().scenarios.front().slots.front().record.best_fitness.size();
  avg.best_fitness.assign(gens, 0.0);
  avg.mean_fitness.assign(gens, 0.0);
  for (const auto& run : r.runs) {
    const auto& rec = run.scenarios.front().slots.front().record;
    for (std::size_t g = 0; g < gens; ++g) {
      avg.best_fitness[g] += rec.best_fitness[g];
      avg.mean_fitness[g] += rec.mean_fitness[g];
    }
  }
  const double n = static_cast<double>(r.runs.size());
  for (std::size_t g = 0; g < gens; ++g) {
    avg.best_fitness[g] /= n;
    avg.mean_fitness[g] /= n;
  }
  write_convergence_csv(out, avg);
}

void write_slot_result_rows(std::ostream& out, std::size_t slot, std::string_view scenario,
                            const noma::SlotResult& result) {
  for (std::size_t u = 0; u < result.users.size(); ++u) {
    const auto& o = result.users[u];
    out << fmt::format("{},{},{},{},{},{},{}\n", slot + 1, scenario, u, o.pair_id, o.alpha,
                       units::linear_to_db(o.sinr), o.rate);
  }
}

void write_users_csv(std::ostream& out, const ExperimentReport& r) {
  out << kSlotResultHeader;
  if (r.runs.empty()) return;
  for (const auto& sr : r.runs.front().scenarios) {
    for (std::size_t s = 0; s < sr.slots.size(); ++s) {
      write_slot_result_rows(out, s, ga::scenario_name(sr.kind), sr.slots[s].result);
    }
  }
}

void emit_outputs(const ExperimentReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error(
        fmt::format("cannot create output directory '{}': {}", dir.string(), ec.message()));
  }
  write_file(dir / "results.json",
             [&](std::ostream& o) { o << report_to_json(report).dump(2) << '\n'; });
  write_file(dir / "rates.csv", [&](std::ostream& o) { write_rates_csv(o, report); });
  write_file(dir / "fractions.csv", [&](std::ostream& o) { write_fractions_csv(o, report); });
  write_file(dir / "trajectory.csv", [&](std::ostream& o) { write_trajectory_csv(o, report); });
  write_file(dir / "convergence.csv",
             [&](std::ostream& o) { write_convergence_csv(o, report); });
  write_file(dir / "users.csv", [&](std::ostream& o) { write_users_csv(o, report); });
}

}  // namespace mirs::experiment
