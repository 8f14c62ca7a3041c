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

#ifndef SELDKIT_AUDIO_HPP_
#define SELDKIT_AUDIO_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "seldkit/common.hpp"

namespace seldkit {

// Channel order is (W, Y, Z, X) everywhere, matching the WAV convention.
enum FoaChannel { kW = 0, kY = 1, kZ = 2, kX = 3 };

struct FoaClip {
  double sample_rate = kDefaultSampleRate;
  std::array<std::vector<double>, 4> channels;

  std::size_t length() const { return channels[0].size(); }

  void resize(std::size_t n) {
    for (auto& ch : channels) ch.assign(n, 0.0);
  }

  double peak() const {
    double p = 0.0;
    for (const auto& ch : channels) {
      for (double v : ch) p = std::max(p, std::abs(v));
    }
    return p;
  }
};

inline double peak_abs(const std::vector<double>& x) {
  double p = 0.0;
  for (double v : x) p = std::max(p, std::abs(v));
  return p;
}

inline double energy(const std::vector<double>& x) {
  double e = 0.0;
  for (double v : x) e += v * v;
  return e;
}

}  // namespace seldkit

#endif  // SELDKIT_AUDIO_HPP_
