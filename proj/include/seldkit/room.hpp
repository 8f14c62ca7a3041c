// Copyright 2026 The seldkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SELDKIT_ROOM_HPP_
#define SELDKIT_ROOM_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "seldkit/geometry.hpp"
#include "seldkit/material.hpp"

namespace seldkit {

// Surface order: x=0, x=Lx, y=0, y=Ly, z=0 (floor), z=Lz (ceiling).
enum Surface {
  kWallX0 = 0,
  kWallX1 = 1,
  kWallY0 = 2,
  kWallY1 = 3,
  kFloor = 4,
  kCeiling = 5,
};

struct RoomSpec {
  Vec3 dims{5.0, 5.0, 3.0};
  std::array<Material, 6> surfaces;
  std::vector<Vec3> source_positions;
  Vec3 array_position;

  bool contains(const Vec3& p, double margin = 0.0) const {
    return p.x >= margin && p.x <= dims.x - margin && p.y >= margin &&
           p.y <= dims.y - margin && p.z >= margin && p.z <= dims.z - margin;
  }

  double volume() const { return dims.x * dims.y * dims.z; }

  std::array<double, 6> surface_areas() const {
    const double ax = dims.y * dims.z;
    const double ay = dims.x * dims.z;
    const double az = dims.x * dims.y;
    return {ax, ax, ay, ay, az, az};
  }

  // Throws std::invalid_argument on violated geometry invariants.
  void validate(double margin = 0.2) const;
};

struct RoomBounds {
  Vec3 dim_min{3.0, 3.0, 2.5};
  Vec3 dim_max{8.0, 8.0, 4.0};
  double wall_margin = 0.2;
  int source_count = 4;
};

// Deterministic per seed; dims uniform within bounds, one material per
// surface from the database, positions uniform with the wall margin kept.
RoomSpec sample_room(std::uint64_t seed, const RoomBounds& bounds,
                     const MaterialDb& materials);

}  // namespace seldkit

#endif  // SELDKIT_ROOM_HPP_
