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

#include "mirs/config_io.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <yaml-cpp/yaml.h>

namespace mirs {

namespace {

using Kind = ConfigError::Kind;

struct EnumName {
  int value;
  const char* name;
};

constexpr EnumName kLosModelNames[] = {
    {static_cast<int>(LosModel::kHumanBlockage), "blockage"},
    {static_cast<int>(LosModel::kElevationSigmoid), "sigmoid"},
};

constexpr EnumName kFtpaModeNames[] = {
    {static_cast<int>(FtpaMode::kWeakerGetsMore), "weaker_gets_more"},
    {static_cast<int>(FtpaMode::kStrictEquation), "strict_equation"},
};

template <class E>
std::span<const EnumName> enum_names();
template <>
std::span<const EnumName> enum_names<LosModel>() { return kLosModelNames; }
template <>
std::span<const EnumName> enum_names<FtpaMode>() { return kFtpaModeNames; }

template <class E>
const char* enum_to_name(E value) {
  for (const EnumName& e : enum_names<E>()) {
    if (e.value == static_cast<int>(value)) return e.name;
  }
  return "?";
}

template <class E>
std::optional<E> enum_from_name(std::string_view name) {
  for (const EnumName& e : enum_names<E>()) {
    if (name == e.name) return static_cast<E>(e.value);
  }
  return std::nullopt;
}

void visit_region(std::string_view prefix, auto& region, auto&& v) {
  const std::string p(prefix);
  v(p + ".x_min", region.x_min);
  v(p + ".y_min", region.y_min);
  v(p + ".x_max", region.x_max);
  v(p + ".y_max", region.y_max);
}

// Single source of truth for the document layout: load, save and JSON all
// walk this list. Order here is the emitted order.
template <class Config, class Visitor>
void visit_fields(Config& c, Visitor&& v) {
  v(std::string("seed"), c.seed);
  v(std::string("num_users"), c.num_users);
  visit_region("region", c.region, v);

  v(std::string("channel.a_los"), c.channel.a_los);
  v(std::string("channel.b_los"), c.channel.b_los);
  v(std::string("channel.a_nlos"), c.channel.a_nlos);
  v(std::string("channel.b_nlos"), c.channel.b_nlos);
  v(std::string("channel.carrier_freq_hz"), c.channel.carrier_freq_hz);
  v(std::string("channel.irs_elements_per_user"), c.channel.irs_elements_per_user);
  v(std::string("channel.irs_reflection_coeff"), c.channel.irs_reflection_coeff);
  v(std::string("channel.irs_uav_leg_enabled"), c.channel.irs_uav_leg_enabled);
  v(std::string("channel.los_model"), c.channel.los_model);
  v(std::string("channel.sigmoid_a"), c.channel.sigmoid_a);
  v(std::string("channel.sigmoid_b"), c.channel.sigmoid_b);

  v(std::string("blockage.density"), c.blockage.density);
  v(std::string("blockage.diameter"), c.blockage.diameter);
  v(std::string("blockage.height"), c.blockage.height);

  v(std::string("power.uav_tx_power_dbm"), c.power.uav_tx_power_dbm);
  v(std::string("power.noise_power_dbm"), c.power.noise_power_dbm);
  v(std::string("power.snr_threshold_db"), c.power.snr_threshold_db);
  v(std::string("power.ftpa_decay"), c.power.ftpa_decay);
  v(std::string("power.ftpa_mode"), c.power.ftpa_mode);

  v(std::string("mobility.speed_min"), c.mobility.speed_min);
  v(std::string("mobility.speed_max"), c.mobility.speed_max);
  v(std::string("mobility.pause_duration"), c.mobility.pause_duration);
  v(std::string("mobility.slot_duration"), c.mobility.slot_duration);
  v(std::string("mobility.num_slots"), c.mobility.num_slots);
  v(std::string("mobility.substep"), c.mobility.substep);
  visit_region("mobility.initial_subregion", c.mobility.initial_subregion, v);

  v(std::string("ga.population_size"), c.ga.population_size);
  v(std::string("ga.max_iterations"), c.ga.max_iterations);
  v(std::string("ga.tournament_size"), c.ga.tournament_size);
  v(std::string("ga.crossover_prob"), c.ga.crossover_prob);
  v(std::string("ga.mutation_prob_per_bit"), c.ga.mutation_prob_per_bit);
  v(std::string("ga.bits_per_coordinate"), c.ga.bits_per_coordinate);
  v(std::string("ga.elitism_count"), c.ga.elitism_count);
  v(std::string("ga.uav_alt_min"), c.ga.uav_alt_min);
  v(std::string("ga.uav_alt_max"), c.ga.uav_alt_max);
  v(std::string("ga.irs_height"), c.ga.irs_height);
  v(std::string("ga.penalty_weight"), c.ga.penalty_weight);
  v(std::string("ga.max_displacement"), c.ga.max_displacement);
  v(std::string("ga.displacement_penalty"), c.ga.displacement_penalty);

  v(std::string("experiment.num_seeds"), c.experiment.num_seeds);
  v(std::string("experiment.static_irs"), c.experiment.static_irs);
}

// ---- loading --------------------------------------------------------------

using FlatDoc = std::map<std::string, YAML::Node>;

void flatten(const YAML::Node& node, const std::string& prefix, FlatDoc& out) {
  if (node.IsMap()) {
    for (const auto& kv : node) {
      const std::string key = kv.first.as<std::string>();
      flatten(kv.second, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out.emplace(prefix, node);
}

int line_of(const YAML::Node& node) { return node.Mark().line + 1; }

class Loader {
 public:
  explicit Loader(const FlatDoc& doc) : doc_(doc) {}

  template <class T>
  void operator()(const std::string& key, T& value) {
    auto it = doc_.find(key);
    if (it == doc_.end()) return;
    used_.insert(key);
    assign(key, it->second, value);
  }

  void reject_unknown() const {
    for (const auto& [key, node] : doc_) {
      if (!used_.count(key)) {
        throw ConfigError(Kind::kSchema, key, "unknown configuration key", line_of(node));
      }
    }
  }

 private:
  template <class T>
  static T scalar(const std::string& key, const YAML::Node& node, const char* type) {
    if (!node.IsScalar()) {
      throw ConfigError(Kind::kSchema, key, fmt::format("expected a {} scalar", type),
                        line_of(node));
    }
    try {
      return node.as<T>();
    } catch (const YAML::Exception&) {
      throw ConfigError(Kind::kSchema, key,
                        fmt::format("cannot parse '{}' as {}", node.Scalar(), type),
                        line_of(node));
    }
  }

  static void assign(const std::string& key, const YAML::Node& n, double& v) {
    v = scalar<double>(key, n, "number");
  }
  static void assign(const std::string& key, const YAML::Node& n, std::int64_t& v) {
    v = scalar<std::int64_t>(key, n, "integer");
  }
  static void assign(const std::string& key, const YAML::Node& n, std::uint64_t& v) {
    v = scalar<std::uint64_t>(key, n, "unsigned integer");
  }
  static void assign(const std::string& key, const YAML::Node& n, bool& v) {
    v = scalar<bool>(key, n, "boolean");
  }
  static void assign(const std::string& key, const YAML::Node& n,
                     std::optional<double>& v) {
    if (n.IsNull()) {
      v.reset();
      return;
    }
    v = scalar<double>(key, n, "number");
  }
  static void assign(const std::string& key, const YAML::Node& n,
                     std::optional<Vec2>& v) {
    if (n.IsNull()) {
      v.reset();
      return;
    }
    if (!n.IsSequence() || n.size() != 2) {
      throw ConfigError(Kind::kSchema, key, "expected a [x, y] pair", line_of(n));
    }
    v = Vec2{scalar<double>(key, n[0], "number"), scalar<double>(key, n[1], "number")};
  }
  template <class E>
    requires std::is_enum_v<E>
  static void assign(const std::string& key, const YAML::Node& n, E& v) {
    const auto name = scalar<std::string>(key, n, "string");
    const auto parsed = enum_from_name<E>(name);
    if (!parsed) {
      throw ConfigError(Kind::kSchema, key, fmt::format("unknown value '{}'", name),
                        line_of(n));
    }
    v = *parsed;
  }

  const FlatDoc& doc_;
  std::set<std::string> used_;
};

// ---- saving ---------------------------------------------------------------

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, '.')) parts.push_back(part);
  return parts;
}

// Nested string tree preserving visit order.
struct Tree {
  std::vector<std::pair<std::string, Tree>> children;
  std::optional<std::string> scalar;
  std::optional<std::vector<std::string>> sequence;
  bool null = false;

  Tree& child(const std::string& name) {
    for (auto& [k, t] : children) {
      if (k == name) return t;
    }
    children.emplace_back(name, Tree{});
    return children.back().second;
  }
};

class Saver {
 public:
  template <class T>
  void operator()(const std::string& key, const T& value) {
    Tree* node = &root_;
    for (const auto& part : split_key(key)) node = &node->child(part);
    set(*node, value);
  }

  void emit(YAML::Emitter& out) const { emit(out, root_); }

 private:
  static void set(Tree& t, double v) { t.scalar = fmt::format("{}", v); }
  static void set(Tree& t, std::int64_t v) { t.scalar = fmt::format("{}", v); }
  static void set(Tree& t, std::uint64_t v) { t.scalar = fmt::format("{}", v); }
  static void set(Tree& t, bool v) { t.scalar = v ? "true" : "false"; }
  static void set(Tree& t, const std::optional<double>& v) {
    if (v) {
      t.scalar = fmt::format("{}", *v);
    } else {
      t.null = true;
    }
  }
  static void set(Tree& t, const std::optional<Vec2>& v) {
    if (v) {
      t.sequence = std::vector<std::string>{fmt::format("{}", v->x), fmt::format("{}", v->y)};
    } else {
      t.null = true;
    }
  }
  template <class E>
    requires std::is_enum_v<E>
  static void set(Tree& t, E v) { t.scalar = enum_to_name(v); }

  static void emit(YAML::Emitter& out, const Tree& t) {
    if (t.null) {
      out << YAML::Null;
      return;
    }
    if (t.scalar) {
      out << *t.scalar;
      return;
    }
    if (t.sequence) {
      out << YAML::Flow << YAML::BeginSeq;
      for (const auto& s : *t.sequence) out << s;
      out << YAML::EndSeq;
      return;
    }
    out << YAML::BeginMap;
    for (const auto& [k, child] : t.children) {
      out << YAML::Key << k << YAML::Value;
      emit(out, child);
    }
    out << YAML::EndMap;
  }

  Tree root_;
};

// ---- json -----------------------------------------------------------------

class JsonWriter {
 public:
  template <class T>
  void operator()(const std::string& key, const T& value) {
    nlohmann::json* node = &root_;
    for (const auto& part : split_key(key)) node = &(*node)[part];
    set(*node, value);
  }

  nlohmann::json take() { return std::move(root_); }

 private:
  template <class T>
  static void set(nlohmann::json& j, const T& v) {
    if constexpr (std::is_enum_v<T>) {
      j = enum_to_name(v);
    } else {
      j = v;
    }
  }
  static void set(nlohmann::json& j, const std::optional<double>& v) {
    j = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  }
  static void set(nlohmann::json& j, const std::optional<Vec2>& v) {
    j = v ? nlohmann::json::array({v->x, v->y}) : nlohmann::json(nullptr);
  }

  nlohmann::json root_ = nlohmann::json::object();
};

}  // namespace

ScenarioConfig load_config_string(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(Kind::kSchema, "<document>", e.msg, e.mark.line + 1);
  }
  ScenarioConfig config;
  if (root.IsNull()) {
    validate(config);
    return config;
  }
  if (!root.IsMap()) {
    throw ConfigError(Kind::kSchema, "<document>", "top level must be a mapping",
                      line_of(root));
  }
  FlatDoc doc;
  flatten(root, "", doc);
  Loader loader(doc);
  visit_fields(config, loader);
  loader.reject_unknown();
  validate(config);
  return config;
}

ScenarioConfig load_config(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_config_string(buffer.str());
}

ScenarioConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(Kind::kSchema, path.string(), "cannot open configuration file");
  }
  return load_config(in);
}

void save_config(std::ostream& out, const ScenarioConfig& config) {
  Saver saver;
  visit_fields(config, saver);
  YAML::Emitter emitter;
  saver.emit(emitter);
  out << emitter.c_str() << '\n';
}

std::string config_to_yaml(const ScenarioConfig& config) {
  std::ostringstream out;
  save_config(out, config);
  return out.str();
}

nlohmann::json config_to_json(const ScenarioConfig& config) {
  JsonWriter writer;
  visit_fields(config, writer);
  return writer.take();
}

bool apply_seed_env_override(ScenarioConfig& config) {
  const char* value = std::getenv(kSeedEnvVar);
  if (value == nullptr || *value == '\0') return false;
  try {
    std::size_t consumed = 0;
    const unsigned long long seed = std::stoull(value, &consumed, 10);
    if (consumed != std::string_view(value).size()) throw std::invalid_argument("trailing");
    config.seed = seed;
  } catch (const std::exception&) {
    throw ConfigError(Kind::kSchema, kSeedEnvVar,
                      fmt::format("'{}' is not an unsigned integer", value));
  }
  return true;
}

}  // namespace mirs
