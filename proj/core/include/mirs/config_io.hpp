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
#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "mirs/scenario.hpp"

namespace mirs {

/// Parses a YAML scenario document. Keys absent from the document keep their
/// defaults; unknown keys and wrongly typed values raise ConfigError(kSchema)
/// with the key path and source line. The result is validated before return.
ScenarioConfig load_config(std::istream& in);
ScenarioConfig load_config_string(const std::string& text);
ScenarioConfig load_config_file(const std::filesystem::path& path);

/// Emits every field, so the document reloads to an equal config.
void save_config(std::ostream& out, const ScenarioConfig& config);
std::string config_to_yaml(const ScenarioConfig& config);

nlohmann::json config_to_json(const ScenarioConfig& config);

/// Name of the environment variable that overrides `seed`.
inline constexpr const char* kSeedEnvVar = "MIRS_SEED";

/// Applies the seed override from the environment, if set. Returns true when
/// an override was applied.
bool apply_seed_env_override(ScenarioConfig& config);

}  // namespace mirs
