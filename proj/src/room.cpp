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

#include "seldkit/room.hpp"

#include <stdexcept>
#include <string>

#include "seldkit/rng.hpp"

namespace seldkit {

void RoomSpec::validate(double margin) const {
  if (!(dims.x > 0.0 && dims.y > 0.0 && dims.z > 0.0)) {
    throw std::invalid_argument("room dimensions must be positive");
  }
  for (const auto& m : surfaces) m.validate();
  if (!contains(array_position, margin)) {
    throw std::invalid_argument("array position violates the wall margin");
  }
  for (const auto& p : source_positions) {
    if (!contains(p, margin)) {
      throw std::invalid_argument("source position violates the wall margin");
    }
  }
}

RoomSpec sample_room(std::uint64_t seed, const RoomBounds& bounds,
                     const MaterialDb& materials) {
  if (materials.empty()) {
    throw ConfigError("sample_room: material database is empty");
  }
  if (bounds.dim_min.x > bounds.dim_max.x ||
      bounds.dim_min.y > bounds.dim_max.y ||
      bounds.dim_min.z > bounds.dim_max.z) {
    throw ConfigError("sample_room: dim_min exceeds dim_max");
  }
  const double min_dim =
      std::min({bounds.dim_min.x, bounds.dim_min.y, bounds.dim_min.z});
  if (min_dim <= 2.0 * bounds.wall_margin) {
    throw ConfigError("sample_room: margin leaves no interior volume");
  }

  Rng rng(seed);
  RoomSpec room;
  room.dims = {rng.uniform(bounds.dim_min.x, bounds.dim_max.x),
               rng.uniform(bounds.dim_min.y, bounds.dim_max.y),
               rng.uniform(bounds.dim_min.z, bounds.dim_max.z)};
  for (auto& surface : room.surfaces) {
    surface = materials.at(
        static_cast<std::size_t>(rng.uniform_int(0, materials.size() - 1)));
  }

  const double m = bounds.wall_margin;
  const auto sample_position = [&]() -> Vec3 {
    return {rng.uniform(m, room.dims.x - m), rng.uniform(m, room.dims.y - m),
            rng.uniform(m, room.dims.z - m)};
  };
  room.array_position = sample_position();
  room.source_positions.resize(
      static_cast<std::size_t>(std::max(1, bounds.source_count)));
  for (auto& p : room.source_positions) p = sample_position();

  room.validate(m);
  return room;
}

}  // namespace seldkit
