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

#include "mirs/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <fmt/format.h>

namespace mirs::mobility {

MobilityTrace::MobilityTrace(std::size_t num_slots, std::size_t num_users)
    : num_slots_(num_slots), num_users_(num_users), positions_(num_slots * num_users) {}

namespace {

Vec2 uniform_point(const Region& r, Rng& rng) {
  const double x = rng.uniform(r.x_min, r.x_max);
  const double y = rng.uniform(r.y_min, r.y_max);
  return {x, y};
}

Vec2 clamp_to(const Region& r, Vec2 p) {
  return {std::clamp(p.x, r.x_min, r.x_max), std::clamp(p.y, r.y_min, r.y_max)};
}

}  // namespace

std::vector<UserState> init_users(const ScenarioConfig& config, Rng& rng) {
  const Region& sub = config.mobility.initial_subregion;
  if (!config.region.contains(sub)) {
    throw ConfigError(ConfigError::Kind::kValidation, "mobility.initial_subregion",
                      "must lie inside region");
  }
  std::vector<UserState> users;
  users.reserve(static_cast<std::size_t>(config.num_users));
  for (std::int64_t i = 0; i < config.num_users; ++i) {
    UserState u;
    u.id = static_cast<std::size_t>(i);
    u.position = uniform_point(sub, rng);
    u.waypoint = uniform_point(config.region, rng);
    u.speed = rng.uniform(config.mobility.speed_min, config.mobility.speed_max);
    users.push_back(u);
  }
  return users;
}

UserState step(UserState user, double dt, const Region& region,
               const MobilityParams& mobility, Rng& rng) {
  if (user.pause_remaining > 0.0) {
    user.pause_remaining = std::max(0.0, user.pause_remaining - dt);
    return user;
  }
  if (user.arrived) {
    user.waypoint = uniform_point(region, rng);
    user.speed = rng.uniform(mobility.speed_min, mobility.speed_max);
    user.arrived = false;
  }
  const double dx = user.waypoint.x - user.position.x;
  const double dy = user.waypoint.y - user.position.y;
  const double remaining = std::hypot(dx, dy);
  const double travel = user.speed * dt;
  if (travel >= remaining) {
    user.position = user.waypoint;
    user.pause_remaining = mobility.pause_duration;
    user.arrived = true;
    return user;
  }
  const double f = travel / remaining;
  user.position = clamp_to(region, {user.position.x + dx * f, user.position.y + dy * f});
  return user;
}

MobilityTrace generate_trace(const ScenarioConfig& config, Rng& rng) {
  const DerivedParams derived = derive(config);
  auto users = init_users(config, rng);
  const auto num_slots = static_cast<std::size_t>(config.mobility.num_slots);
  MobilityTrace trace(num_slots, users.size());
  for (std::size_t slot = 0; slot < num_slots; ++slot) {
    if (slot > 0) {
      for (std::int64_t s = 0; s < derived.substeps_per_slot; ++s) {
        for (auto& u : users) {
          u = step(u, config.mobility.substep, config.region, config.mobility, rng);
        }
      }
    }
    for (std::size_t i = 0; i < users.size(); ++i) {
      trace.at(slot, i) = users[i].position;
    }
  }
  return trace;
}

void write_trace_csv(std::ostream& out, const MobilityTrace& trace) {
  out << "slot,user_id,x,y\n";
  for (std::size_t s = 0; s < trace.num_slots(); ++s) {
    for (std::size_t u = 0; u < trace.num_users(); ++u) {
      const Vec2 p = trace.at(s, u);
      out << fmt::format("{},{},{},{}\n", s + 1, u, p.x, p.y);
    }
  }
}

MobilityTrace read_trace_csv(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error(fmt::format("trace csv line {}: {}", line_no, what));
  };

  if (!std::getline(in, line)) {
    line_no = 1;
    fail("missing header");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "slot,user_id,x,y") fail("expected header 'slot,user_id,x,y'");

  std::map<std::pair<std::size_t, std::size_t>, Vec2> cells;
  std::size_t max_slot = 0;
  std::size_t max_user = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string field[4];
    for (int i = 0; i < 4; ++i) {
      if (!std::getline(row, field[i], ',')) fail("expected 4 comma-separated fields");
    }
    std::string extra;
    if (std::getline(row, extra)) fail("too many fields");
    std::size_t slot = 0;
    std::size_t user = 0;
    Vec2 p;
    try {
      std::size_t used = 0;
      const long long s = std::stoll(field[0], &used);
      if (used != field[0].size() || s < 1) fail("slot must be an integer >= 1");
      slot = static_cast<std::size_t>(s - 1);
      const long long u = std::stoll(field[1], &used);
      if (used != field[1].size() || u < 0) fail("user_id must be an integer >= 0");
      user = static_cast<std::size_t>(u);
      p.x = std::stod(field[2], &used);
      if (used != field[2].size()) fail("bad x");
      p.y = std::stod(field[3], &used);
      if (used != field[3].size()) fail("bad y");
    } catch (const std::logic_error&) {
      fail("unparseable number");
    }
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail("non-finite coordinate");
    if (!cells.emplace(std::make_pair(slot, user), p).second) {
      fail(fmt::format("duplicate row for slot {} user {}", slot + 1, user));
    }
    max_slot = std::max(max_slot, slot);
    max_user = std::max(max_user, user);
  }
  if (cells.empty()) fail("no data rows");
  const std::size_t num_slots = max_slot + 1;
  const std::size_t num_users = max_user + 1;
  if (cells.size() != num_slots * num_users) {
    fail(fmt::format("expected {} rows for {} slots x {} users, found {}",
                     num_slots * num_users, num_slots, num_users, cells.size()));
  }
  MobilityTrace trace(num_slots, num_users);
  for (const auto& [key, p] : cells) trace.at(key.first, key.second) = p;
  return trace;
}

}  // namespace mirs::mobility
