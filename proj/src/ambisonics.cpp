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

#include "seldkit/ambisonics.hpp"

#include <cmath>
#include <stdexcept>

namespace seldkit {

FoaGains foa_gains(const Direction& dir) {
  const double az = deg_to_rad(dir.azimuth_deg);
  const double el = deg_to_rad(dir.elevation_deg);
  FoaGains g;
  g.w = 1.0;
  g.y = std::sin(az) * std::cos(el);
  g.z = std::sin(el);
  g.x = std::cos(az) * std::cos(el);
  return g;
}

std::vector<RotationSpec> rotation_presets() {
  std::vector<RotationSpec> presets;
  presets.reserve(16);
  for (int k = -4; k < 4; ++k) {
    for (bool flip : {false, true}) {
      presets.push_back({45.0 * k, flip});
    }
  }
  return presets;
}

Direction rotate_direction(const Direction& d, const RotationSpec& rot) {
  Direction out;
  out.azimuth_deg = wrap_azimuth_deg(d.azimuth_deg + rot.azimuth_offset_deg);
  out.elevation_deg = rot.elevation_flip ? -d.elevation_deg : d.elevation_deg;
  return out;
}

std::pair<FoaClip, SceneMetadata> rotate_foa(const FoaClip& clip,
                                             const SceneMetadata& labels,
                                             const RotationSpec& rot) {
  for (const auto& ch : clip.channels) {
    if (ch.size() != clip.length()) {
      throw std::invalid_argument("rotate_foa: ragged channel lengths");
    }
  }

  const double psi = deg_to_rad(rot.azimuth_offset_deg);
  const double c = std::cos(psi);
  const double s = std::sin(psi);
  const double zsign = rot.elevation_flip ? -1.0 : 1.0;

  FoaClip out;
  out.sample_rate = clip.sample_rate;
  const std::size_t n = clip.length();
  out.resize(n);
  const auto& x = clip.channels[kX];
  const auto& y = clip.channels[kY];
  for (std::size_t i = 0; i < n; ++i) {
    out.channels[kW][i] = clip.channels[kW][i];
    out.channels[kX][i] = c * x[i] - s * y[i];
    out.channels[kY][i] = s * x[i] + c * y[i];
    out.channels[kZ][i] = zsign * clip.channels[kZ][i];
  }

  SceneMetadata rotated = labels;
  for (auto& frame : rotated.frames) {
    for (auto& ev : frame) {
      const Direction d =
          rotate_direction({ev.azimuth_deg, ev.elevation_deg}, rot);
      ev.azimuth_deg = d.azimuth_deg;
      ev.elevation_deg = d.elevation_deg;
    }
  }
  return {std::move(out), std::move(rotated)};
}

FoaClip pseudo_foa(std::span<const double> mono, double sample_rate,
                   const Direction& dir) {
  const FoaGains g = foa_gains(dir);
  FoaClip out;
  out.sample_rate = sample_rate;
  out.resize(mono.size());
  for (std::size_t i = 0; i < mono.size(); ++i) {
    out.channels[kW][i] = mono[i];
    out.channels[kY][i] = g.y * mono[i];
    out.channels[kZ][i] = g.z * mono[i];
    out.channels[kX][i] = g.x * mono[i];
  }
  return out;
}

}  // namespace seldkit
