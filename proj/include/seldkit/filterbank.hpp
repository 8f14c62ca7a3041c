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

#ifndef SELDKIT_FILTERBANK_HPP_
#define SELDKIT_FILTERBANK_HPP_

#include <array>
#include <span>
#include <vector>

#include "seldkit/material.hpp"

namespace seldkit {

// Linear-phase FIR octave filterbank over the 7 bands centered 125 Hz to
// 8 kHz. The per-band magnitude masks are amplitude-complementary, so the
// sum of all band filters is an exact unit impulse delayed by group_delay().
class OctaveFilterbank {
 public:
  static OctaveFilterbank design(double sample_rate, int fir_length = 1025);

  double sample_rate() const { return sample_rate_; }
  int fir_length() const { return fir_length_; }
  int group_delay() const { return fir_length_ / 2; }
  const std::vector<double>& fir(int band) const { return firs_.at(band); }

  // Full linear convolution with the band filter (adds group_delay()).
  std::vector<double> apply(int band, std::span<const double> x) const;

 private:
  double sample_rate_ = 0.0;
  int fir_length_ = 0;
  std::array<std::vector<double>, kBandCount> firs_;
};

}  // namespace seldkit

#endif  // SELDKIT_FILTERBANK_HPP_
