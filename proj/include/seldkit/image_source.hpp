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

#ifndef SELDKIT_IMAGE_SOURCE_HPP_
#define SELDKIT_IMAGE_SOURCE_HPP_

#include <array>
#include <vector>

#include "seldkit/room.hpp"

namespace seldkit {

struct ImageSource {
  Vec3 position;
  int order = 0;  // total reflection count
  std::array<double, kBandCount> band_gain{};  // product of sqrt(1 - alpha)
  double distance_m = 0.0;  // from the array position
  // Scattering-phase randomization: +1 or -1, fixed per image identity.
  // The regular mirror lattice makes arrival clusters add coherently,
  // which inflates narrow-band decay tails well past the Eyring rate;
  // randomizing the reflection sign restores the incoherent energy decay.
  // The direct path is always +1.
  double phase_sign = 1.0;
};

struct ImageSourceSet {
  Vec3 array_position;
  std::vector<ImageSource> images;

  std::size_t size() const { return images.size(); }
};

// Mirror-image enumeration for a shoebox room. Keeps every image whose
// total reflection count is <= max_order; the direct path is order 0.
ImageSourceSet enumerate_image_sources(const RoomSpec& room, const Vec3& src,
                                       int max_order);

}  // namespace seldkit

#endif  // SELDKIT_IMAGE_SOURCE_HPP_
