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

#include <filesystem>
#include <ostream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mirs/experiment.hpp"
#include "mirs/optimizer.hpp"

// Output files of an experiment. All CSVs are comma-delimited with a header
// row and '.' as decimal separator; numbers use the shortest representation
// that reads back to the same double.
namespace mirs::experiment {

nlohmann::json report_to_json(const ExperimentReport& report);

/// slot,scenario,sum_rate (seed-averaged)
void write_rates_csv(std::ostream& out, const ExperimentReport& report);

/// slot,pair,alpha_weak,alpha_strong (seed-averaged, fractions scenario)
void write_fractions_csv(std::ostream& out, const ExperimentReport& report);

/// slot,entity,x,y,z for the first seed; entity is "<scenario>/uav" or
/// "<scenario>/irs" (z of the IRS is the element height).
void write_trajectory_csv(std::ostream& out, const ExperimentReport& report);

/// generation,best_fitness,mean_fitness for a single GA run.
void write_convergence_csv(std::ostream& out, const ga::GaRunRecord& record);

/// generation,best_fitness,mean_fitness averaged over seeds for slot 1 of
/// the first scenario.
void write_convergence_csv(std::ostream& out, const ExperimentReport& report);

/// slot,scenario,user,pair_id,alpha,sinr_db,rate for one slot result. `slot`
/// is the 0-based index; rows carry it 1-based like every other output.
void write_slot_result_rows(std::ostream& out, std::size_t slot, std::string_view scenario,
                            const noma::SlotResult& result);
inline constexpr std::string_view kSlotResultHeader =
    "slot,scenario,user,pair_id,alpha,sinr_db,rate\n";

/// Per-user rows for the first seed, every scenario and slot.
void write_users_csv(std::ostream& out, const ExperimentReport& report);

/// Writes results.json, rates.csv, fractions.csv, trajectory.csv,
/// convergence.csv and users.csv into `dir` (created if missing). Throws
/// std::runtime_error naming the path on I/O failure.
void emit_outputs(const ExperimentReport& report, const std::filesystem::path& dir);

}  // namespace mirs::experiment
