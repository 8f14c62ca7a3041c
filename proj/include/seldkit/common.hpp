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

#ifndef SELDKIT_COMMON_HPP_
#define SELDKIT_COMMON_HPP_

#include <cmath>
#include <stdexcept>
#include <string>

namespace seldkit {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfSound = 343.0;   // m/s
inline constexpr double kDefaultSampleRate = 24000.0;
inline constexpr double kLabelHopSeconds = 0.1;  // label frame resolution

// Bad or inconsistent user-supplied configuration.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / stream failures.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// Wraps an azimuth into [-180, 180).
inline double wrap_azimuth_deg(double az) {
  while (az >= 180.0) az -= 360.0;
  while (az < -180.0) az += 360.0;
  return az;
}

inline double db_to_amplitude(double db) { return std::pow(10.0, db / 20.0); }

}  // namespace seldkit

#endif  // SELDKIT_COMMON_HPP_
