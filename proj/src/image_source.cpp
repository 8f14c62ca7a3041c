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

#include "seldkit/image_source.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <stdexcept>

#include "seldkit/rng.hpp"

namespace seldkit {

namespace {

// One mirror family along a single axis: position (1-2q)*s + 2mL with
// |m - q| hits on the lower wall and |m| hits on the upper wall.
struct AxisImage {
  double position;
  int order;
  int lattice;  // 2m + q, a unique per-axis index
  std::array<double, kBandCount> gain;
};

std::uint64_t hash_double(std::uint64_t h, double v) {
  std::uint64_t bits = 0;
  std::memcpy(&bits, &v, sizeof(bits));
  return derive_seed(h, bits);
}

std::vector<AxisImage> axis_images(double src, double length, int max_order,
                                   const Material& lower,
                                   const Material& upper) {
  std::array<double, kBandCount> r_lower;
  std::array<double, kBandCount> r_upper;
  for (int b = 0; b < kBandCount; ++b) {
    r_lower[b] = std::sqrt(1.0 - lower.absorption[b]);
    r_upper[b] = std::sqrt(1.0 - upper.absorption[b]);
  }

  std::vector<AxisImage> out;
  const int m_span = max_order / 2 + 1;
  for (int m = -m_span; m <= m_span; ++m) {
    for (int q = 0; q <= 1; ++q) {
      const int hits_lower = std::abs(m - q);
      const int hits_upper = std::abs(m);
      const int order = hits_lower + hits_upper;
      if (order > max_order) continue;
      AxisImage img;
      img.position = (1 - 2 * q) * src + 2.0 * m * length;
      img.order = order;
      img.lattice = 2 * m + q;
      for (int b = 0; b < kBandCount; ++b) {
        img.gain[b] = std::pow(r_lower[b], hits_lower) *
                      std::pow(r_upper[b], hits_upper);
      }
      out.push_back(img);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AxisImage& a, const AxisImage& b) {
              return a.order < b.order;
            });
  return out;
}

}  // namespace

ImageSourceSet enumerate_image_sources(const RoomSpec& room, const Vec3& src,
                                       int max_order) {
  if (max_order < 0) {
    throw std::invalid_argument("enumerate_image_sources: negative order");
  }
  if (!room.contains(src)) {
    throw std::invalid_argument(
        "enumerate_image_sources: source outside the room");
  }

  const auto xs = axis_images(src.x, room.dims.x, max_order,
                              room.surfaces[kWallX0], room.surfaces[kWallX1]);
  const auto ys = axis_images(src.y, room.dims.y, max_order,
                              room.surfaces[kWallY0], room.surfaces[kWallY1]);
  const auto zs = axis_images(src.z, room.dims.z, max_order,
                              room.surfaces[kFloor], room.surfaces[kCeiling]);

  // Phase seed bound to the geometry so a given (room, source) pair always
  // draws the same sign for the same mirror index.
  std::uint64_t geo_hash = hash_double(0, room.dims.x);
  geo_hash = hash_double(geo_hash, room.dims.y);
  geo_hash = hash_double(geo_hash, room.dims.z);
  geo_hash = hash_double(geo_hash, src.x);
  geo_hash = hash_double(geo_hash, src.y);
  geo_hash = hash_double(geo_hash, src.z);

  ImageSourceSet set;
  set.array_position = room.array_position;
  for (const auto& ix : xs) {
    if (ix.order > max_order) break;
    for (const auto& iy : ys) {
      const int oxy = ix.order + iy.order;
      if (oxy > max_order) break;
      for (const auto& iz : zs) {
        const int order = oxy + iz.order;
        if (order > max_order) break;
        ImageSource img;
        img.position = {ix.position, iy.position, iz.position};
        img.order = order;
        for (int b = 0; b < kBandCount; ++b) {
          img.band_gain[b] = ix.gain[b] * iy.gain[b] * iz.gain[b];
        }
        img.distance_m = (img.position - room.array_position).norm();
        if (order > 0) {
          const std::uint64_t key =
              derive_seed(geo_hash,
                          (static_cast<std::uint64_t>(
                               static_cast<std::uint32_t>(ix.lattice))
                           << 42) ^
                              (static_cast<std::uint64_t>(
                                   static_cast<std::uint32_t>(iy.lattice))
                               << 21) ^
                              static_cast<std::uint64_t>(
                                  static_cast<std::uint32_t>(iz.lattice)));
          img.phase_sign = (key & 1) ? 1.0 : -1.0;
        }
        set.images.push_back(img);
      }
    }
  }
  return set;
}

}  // namespace seldkit
