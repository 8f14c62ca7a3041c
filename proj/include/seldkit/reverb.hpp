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

#ifndef SELDKIT_REVERB_HPP_
#define SELDKIT_REVERB_HPP_

#include <array>
#include <span>

#include "seldkit/filterbank.hpp"
#include "seldkit/room.hpp"
#include "seldkit/srir.hpp"

namespace seldkit {

struct T60Estimate {
  enum class Flag {
    kOk,
    kLowerBound,   // decay never reached -25 dB; value is a lower bound
    kDegenerate,   // too few samples between -5 and -25 dB to fit a line
  };
  double seconds = 0.0;
  Flag flag = Flag::kOk;
};

struct T60Report {
  T60Estimate broadband;
  std::array<T60Estimate, kBandCount> bands;
};

// Schroeder backward integration with a least-squares line over the
// -5..-25 dB range of the decay curve, extrapolated to 60 dB.
T60Estimate schroeder_t60(std::span<const double> impulse_response,
                          double sample_rate);

// Per-band (via the octave filterbank) plus broadband, on the W channel.
// Throws std::invalid_argument for responses shorter than 0.1 s or silent.
T60Report estimate_t60(const Srir& rir);

// Eyring prediction per band from geometry and the area-weighted mean
// absorption. Throws std::invalid_argument when the mean absorption
// reaches 1.
std::array<double, kBandCount> eyring_t60(const RoomSpec& room);

}  // namespace seldkit

#endif  // SELDKIT_REVERB_HPP_
