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

#include <cmath>

namespace mirs {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double horizontal_distance(Vec2 a, Vec2 b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Axis-aligned rectangle on the ground plane, meters. Bounds are inclusive.
struct Region {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 500.0;
  double y_max = 500.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }

  bool contains(Vec2 p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }

  bool contains(const Region& other) const {
    return other.x_min >= x_min && other.x_max <= x_max &&
           other.y_min >= y_min && other.y_max <= y_max;
  }

  friend bool operator==(const Region&, const Region&) = default;
};

}  // namespace mirs
