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

#ifndef SELDKIT_GEOMETRY_HPP_
#define SELDKIT_GEOMETRY_HPP_

#include <algorithm>
#include <cmath>

#include "seldkit/common.hpp"

namespace seldkit {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  Vec3 normalized() const {
    const double n = norm();
    return n > 0.0 ? Vec3{x / n, y / n, z / n} : Vec3{};
  }
};

// Azimuth in [-180, 180) counter-clockwise from +x, elevation in [-90, 90]
// from the horizontal plane.
struct Direction {
  double azimuth_deg = 0.0;
  double elevation_deg = 0.0;
};

inline Vec3 direction_to_unit(const Direction& d) {
  const double az = deg_to_rad(d.azimuth_deg);
  const double el = deg_to_rad(d.elevation_deg);
  return {std::cos(az) * std::cos(el), std::sin(az) * std::cos(el),
          std::sin(el)};
}

inline Direction unit_to_direction(const Vec3& v) {
  const Vec3 u = v.normalized();
  Direction d;
  d.elevation_deg = rad_to_deg(std::asin(std::clamp(u.z, -1.0, 1.0)));
  d.azimuth_deg = (u.x == 0.0 && u.y == 0.0)
                      ? 0.0
                      : wrap_azimuth_deg(rad_to_deg(std::atan2(u.y, u.x)));
  return d;
}

// Great-circle angle between two directions, in degrees.
inline double angular_distance_deg(const Direction& a, const Direction& b) {
  const double c = std::clamp(
      direction_to_unit(a).dot(direction_to_unit(b)), -1.0, 1.0);
  return rad_to_deg(std::acos(c));
}

inline double angle_between_deg(const Vec3& a, const Vec3& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  const double c = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
  return rad_to_deg(std::acos(c));
}

}  // namespace seldkit

#endif  // SELDKIT_GEOMETRY_HPP_
