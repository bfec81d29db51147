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

// mirs: UAV + mobile-IRS NOMA placement experiments.
//
//   mirs run              full scenario comparison, writes results into --out
//   mirs trace            exports a Random Waypoint trace
//   mirs inspect-channel  per-user link budget for a given placement
//   mirs converge         one GA run, per-generation fitness
//   mirs print-config     resolved configuration as YAML

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mirs/channel.hpp"
#include "mirs/config_io.hpp"
#include "mirs/experiment.hpp"
#include "mirs/mobility.hpp"
#include "mirs/optimizer.hpp"
#include "mirs/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string trace_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

mirs::ScenarioConfig resolve_config(const CommonOptions& opts) {
  mirs::ScenarioConfig config =
      opts.config_path.empty() ? mirs::ScenarioConfig{} : mirs::load_config_file(opts.config_path);
  mirs::apply_seed_env_override(config);
  if (opts.seed) config.seed = *opts.seed;
  mirs::validate(config);
  return config;
}

std::optional<mirs::mobility::MobilityTrace> load_trace(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open trace '{}'", path));
  return mirs::mobility::read_trace_csv(in);
}

mirs::mobility::MobilityTrace trace_for(const mirs::ScenarioConfig& config,
                                        const CommonOptions& opts) {
  if (auto t = load_trace(opts.trace_path)) return *t;
  mirs::Rng rng(mirs::derive_seed(config.seed, mirs::streams::kMobility));
  return mirs::mobility::generate_trace(config, rng);
}

std::vector<mirs::ga::ScenarioKind> parse_scenarios(const std::string& list) {
  std::vector<mirs::ga::ScenarioKind> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto kind = mirs::ga::parse_scenario(item);
    if (!kind) {
      throw UsageError(fmt::format(
          "unknown scenario '{}' (expected M-IRS-NOMA, S-IRS-NOMA, No-IRS-NOMA, M-IRS-OMA)",
          item));
    }
    out.push_back(*kind);
  }
  if (out.empty()) throw UsageError("--scenarios is empty");
  return out;
}

std::size_t checked_slot(std::size_t slot, const mirs::mobility::MobilityTrace& trace) {
  if (slot < 1 || slot > trace.num_slots()) {
    throw UsageError(fmt::format("--slot must lie in [1, {}]", trace.num_slots()));
  }
  return slot - 1;
}

// Writes to out_dir/file_name, or stdout when out_dir is empty.
template <class Fn>
void write_output(const std::string& out_dir, const char* file_name, Fn&& fn) {
  if (out_dir.empty()) {
    fn(std::cout);
    return;
  }
  std::filesystem::create_directories(out_dir);
  const auto path = std::filesystem::path(out_dir) / file_name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path.string()));
  fn(out);
  std::cerr << "wrote " << path.string() << '\n';
}

void print_summary(const mirs::experiment::ExperimentReport& report) {
  std::cout << fmt::format("{:>5}", "slot");
  for (auto k : report.scenarios) std::cout << fmt::format(" {:>12}", mirs::ga::scenario_name(k));
  std::cout << '\n';
  for (std::size_t s = 0; s < report.num_slots; ++s) {
    std::cout << fmt::format("{:>5}", s + 1);
    for (std::size_t k = 0; k < report.scenarios.size(); ++k) {
      std::cout << fmt::format(" {:>12.4f}", report.mean_sum_rate[k][s]);
    }
    std::cout << '\n';
  }
  for (const auto& imp : report.improvements) {
    std::cout << fmt::format("{} vs {}: mean improvement {:.2f}%\n",
                             mirs::ga::scenario_name(imp.subject),
                             mirs::ga::scenario_name(imp.baseline), imp.mean_pct);
  }
  if (!report.infeasible.empty()) {
    std::cout << fmt::format("{} (seed, scenario, slot) cells left every user below the "
                             "SINR threshold\n",
                             report.infeasible.size());
  }
}

int cmd_run(const CommonOptions& opts, std::optional<std::size_t> num_seeds,
            const std::string& scenarios) {
  const auto config = resolve_config(opts);
  const auto kinds = parse_scenarios(scenarios);
  const std::size_t count =
      num_seeds ? *num_seeds : static_cast<std::size_t>(config.experiment.num_seeds);
  if (count == 0) throw UsageError("--seeds must be >= 1");
  const auto trace = load_trace(opts.trace_path);
  const auto report = mirs::experiment::run_experiment(
      config, kinds, mirs::experiment::seed_list(config.seed, count),
      trace ? &*trace : nullptr);
  print_summary(report);
  if (!opts.out.empty()) {
    mirs::experiment::emit_outputs(report, opts.out);
    std::cerr << "wrote results to " << opts.out << '\n';
  }
  return report.infeasible.empty() ? kExitOk : kExitInfeasible;
}

int cmd_trace(const CommonOptions& opts) {
  const auto config = resolve_config(opts);
  const auto trace = trace_for(config, opts);
  write_output(opts.out, "trace.csv",
               [&](std::ostream& o) { mirs::mobility::write_trace_csv(o, trace); });
  return kExitOk;
}

int cmd_inspect(const CommonOptions& opts, std::size_t slot, const std::vector<double>& uav,
                const std::vector<double>& irs, bool no_irs) {
  const auto config = resolve_config(opts);
  const auto trace = trace_for(config, opts);
  const std::size_t s = checked_slot(slot, trace);
  mirs::channel::Placement placement{{uav[0], uav[1], uav[2]}, {irs[0], irs[1]}};
  if (!mirs::ga::SearchBox::from_config(config).contains(placement)) {
    throw UsageError("placement lies outside the region or UAV altitude range");
  }
  const auto users = trace.slot(s);
  const auto diag = mirs::channel::inspect_links(placement, users, config, !no_irs);
  write_output(opts.out, "channel.csv", [&](std::ostream& o) {
    o << "user,x,y,d,q,p_los,pathloss_db,uav_gain,irs_distance,irs_gain\n";
    for (std::size_t i = 0; i < diag.size(); ++i) {
      const auto& d = diag[i];
      o << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", i, users[i].x, users[i].y, d.distance,
                       d.horizontal_distance, d.los_probability, d.pathloss_db, d.uav_gain,
                       d.irs_distance, d.irs_gain);
    }
  });
  return kExitOk;
}

int cmd_converge(const CommonOptions& opts, std::size_t slot, const std::string& scenario) {
  const auto config = resolve_config(opts);
  const auto kinds = parse_scenarios(scenario);
  if (kinds.size() != 1) throw UsageError("converge takes exactly one scenario");
  const auto trace = trace_for(config, opts);
  const std::size_t s = checked_slot(slot, trace);
  const auto slots = mirs::ga::optimize_trajectory(trace, config, kinds.front(), config.seed);
  write_output(opts.out, "convergence.csv", [&](std::ostream& o) {
    mirs::experiment::write_convergence_csv(o, slots[s].record);
  });
  return slots[s].result.feasible_count() == 0 ? kExitInfeasible : kExitOk;
}

int cmd_print_config(const CommonOptions& opts) {
  mirs::save_config(std::cout, resolve_config(opts));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV and mobile-IRS NOMA placement simulator"};
  app.require_subcommand(1);

  CommonOptions opts;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_path, "Scenario YAML file")->check(CLI::ExistingFile);
    cmd->add_option("--seed", opts.seed,
                    fmt::format("Master seed (overrides the config and ${})", mirs::kSeedEnvVar));
  };

  std::optional<std::size_t> num_seeds;
  std::string scenarios = "M-IRS-NOMA,S-IRS-NOMA,No-IRS-NOMA,M-IRS-OMA";
  auto* run = app.add_subcommand("run", "Compare scenarios averaged over seeds");
  add_common(run);
  run->add_option("--seeds", num_seeds, "Number of consecutive seeds starting at --seed");
  run->add_option("--scenarios", scenarios, "Comma-separated scenario list");
  run->add_option("--out", opts.out, "Output directory");
  run->add_option("--trace", opts.trace_path, "Use this trace CSV instead of generating one");

  auto* trace = app.add_subcommand("trace", "Export a mobility trace as CSV");
  add_common(trace);
  trace->add_option("--out", opts.out, "Output directory (default: stdout)");

  std::size_t slot = 1;
  std::vector<double> uav;
  std::vector<double> irs;
  bool no_irs = false;
  auto* inspect = app.add_subcommand("inspect-channel", "Per-user link budget CSV");
  add_common(inspect);
  inspect->add_option("--slot", slot, "Slot number, 1-based");
  inspect->add_option("--uav", uav, "UAV position x,y,z")->delimiter(',')->expected(3)->required();
  inspect->add_option("--irs", irs, "IRS vehicle position x,y")->delimiter(',')->expected(2)->required();
  inspect->add_flag("--no-irs", no_irs, "Zero the reflected path");
  inspect->add_option("--trace", opts.trace_path, "Trace CSV to read user positions from");
  inspect->add_option("--out", opts.out, "Output directory (default: stdout)");

  std::string converge_scenario = "M-IRS-NOMA";
  auto* converge = app.add_subcommand("converge", "GA convergence of one slot");
  add_common(converge);
  converge->add_option("--slot", slot, "Slot number, 1-based");
  converge->add_option("--scenario", converge_scenario, "Scenario name");
  converge->add_option("--trace", opts.trace_path, "Trace CSV to read user positions from");
  converge->add_option("--out", opts.out, "Output directory (default: stdout)");

  auto* print_config = app.add_subcommand("print-config", "Print the resolved configuration");
  add_common(print_config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return cmd_run(opts, num_seeds, scenarios);
    if (*trace) return cmd_trace(opts);
    if (*inspect) return cmd_inspect(opts, slot, uav, irs, no_irs);
    if (*converge) return cmd_converge(opts, slot, converge_scenario);
    if (*print_config) return cmd_print_config(opts);
  } catch (const mirs::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
