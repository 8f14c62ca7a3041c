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

#ifndef SELDKIT_AMBISONICS_HPP_
#define SELDKIT_AMBISONICS_HPP_

#include <span>
#include <utility>
#include <vector>

#include "seldkit/audio.hpp"
#include "seldkit/geometry.hpp"
#include "seldkit/scene.hpp"

namespace seldkit {

// First-order directional gains. w is identically 1 and (y, z, x) is the
// unit vector toward the source, so y^2 + z^2 + x^2 = 1 for any direction.
struct FoaGains {
  double w = 1.0;
  double y = 0.0;
  double z = 0.0;
  double x = 0.0;
};

FoaGains foa_gains(const Direction& dir);

// Channel-exact rotation subgroup: azimuth rotation plus optional
// elevation flip. No spherical resampling is needed for these.
struct RotationSpec {
  double azimuth_offset_deg = 0.0;  // in [-180, 180)
  bool elevation_flip = false;
};

// The 16 preset variants: azimuth multiples of 45 degrees x 2 flips.
std::vector<RotationSpec> rotation_presets();

// Rotates signal and labels together. W is untouched; X/Y mix by the
// rotation angle; the flip negates Z and label elevations.
std::pair<FoaClip, SceneMetadata> rotate_foa(const FoaClip& clip,
                                             const SceneMetadata& labels,
                                             const RotationSpec& rot);

Direction rotate_direction(const Direction& d, const RotationSpec& rot);

// Fabricates a 4-channel clip from a mono signal with flat directional
// gains; exact in the time domain.
FoaClip pseudo_foa(std::span<const double> mono, double sample_rate,
                   const Direction& dir);

}  // namespace seldkit

#endif  // SELDKIT_AMBISONICS_HPP_
