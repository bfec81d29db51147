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
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "mirs/geometry.hpp"
#include "mirs/rng.hpp"
#include "mirs/scenario.hpp"

// Random Waypoint movement of ground users.
namespace mirs::mobility {

struct UserState {
  std::size_t id = 0;
  Vec2 position;
  Vec2 waypoint;
  double speed = 0.0;  // m/s
  double pause_remaining = 0.0;
  /// Set when the waypoint was reached; the next move phase draws a fresh
  /// waypoint and speed.
  bool arrived = false;

  friend bool operator==(const UserState&, const UserState&) = default;
};

/// Per-slot user positions, num_slots x num_users, row-major by slot.
class MobilityTrace {
 public:
  MobilityTrace() = default;
  MobilityTrace(std::size_t num_slots, std::size_t num_users);

  std::size_t num_slots() const { return num_slots_; }
  std::size_t num_users() const { return num_users_; }

  Vec2& at(std::size_t slot, std::size_t user) { return positions_[slot * num_users_ + user]; }
  Vec2 at(std::size_t slot, std::size_t user) const {
    return positions_[slot * num_users_ + user];
  }

  std::span<const Vec2> slot(std::size_t slot) const {
    return std::span<const Vec2>(positions_).subspan(slot * num_users_, num_users_);
  }

  friend bool operator==(const MobilityTrace&, const MobilityTrace&) = default;

 private:
  std::size_t num_slots_ = 0;
  std::size_t num_users_ = 0;
  std::vector<Vec2> positions_;
};

/// Users start uniformly inside the initial subregion, each with a waypoint
/// drawn uniformly over the full region and a speed from [speed_min, speed_max].
///
/// Draw order per user: x, y, waypoint x, waypoint y, speed.
std::vector<UserState> init_users(const ScenarioConfig& config, Rng& rng);

/// Advances one user by dt seconds.
///
/// A paused user only counts its pause down. A user that reaches its waypoint
/// during the step stops there (the remainder of the step is not used) and
/// pauses for pause_duration; its next move phase draws a new waypoint, then
/// a new speed, and moves.
UserState step(UserState user, double dt, const Region& region,
               const MobilityParams& mobility, Rng& rng);

/// Simulates all users with the configured sub-step and records positions at
/// each slot boundary. Slot 0 holds the initial distribution.
MobilityTrace generate_trace(const ScenarioConfig& config, Rng& rng);

/// CSV with header `slot,user_id,x,y`, one row per (slot, user), slot-major.
void write_trace_csv(std::ostream& out, const MobilityTrace& trace);

/// Reads the format written by write_trace_csv. Rows may appear in any order
/// but every (slot, user) cell of the dense grid must be present exactly once.
/// Throws std::runtime_error with the line number on malformed input.
MobilityTrace read_trace_csv(std::istream& in);

}  // namespace mirs::mobility
