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

#ifndef SELDKIT_SRIR_HPP_
#define SELDKIT_SRIR_HPP_

#include <array>
#include <vector>

#include "seldkit/filterbank.hpp"
#include "seldkit/geometry.hpp"
#include "seldkit/image_source.hpp"

namespace seldkit {

// 4-channel spatial impulse response, channel order (W, Y, Z, X).
struct Srir {
  double sample_rate = 0.0;
  std::array<std::vector<double>, 4> channels;
  Direction source_direction;  // direct-path arrival at the array

  std::size_t length() const { return channels[0].size(); }
  double duration_s() const {
    return sample_rate > 0.0 ? length() / sample_rate : 0.0;
  }
};

// Direct first-order encoding of every image: a 16-tap windowed-sinc
// impulse at distance/c with amplitude 1/distance, shaped per band by the
// image's reflection gains and recombined through the octave filterbank.
Srir render_foa_srir(const ImageSourceSet& images, const Vec3& array_pos,
                     double sample_rate, const OctaveFilterbank& bands);

// Truncation order such that the farthest kept image exceeds
// 1.5 * t60_s * c; used to avoid biasing decay estimates down.
int max_order_for_t60(const RoomSpec& room, double t60_s);

}  // namespace seldkit

#endif  // SELDKIT_SRIR_HPP_
