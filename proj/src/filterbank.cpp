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

#include "seldkit/filterbank.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "seldkit/common.hpp"
#include "seldkit/fft.hpp"

namespace seldkit {

namespace {

constexpr std::size_t kDesignFft = 8192;

// Smooth 0->1 transition centered at `edge` with half-width `width`.
double rising_edge(double f, double edge, double width) {
  if (f <= edge - width) return 0.0;
  if (f >= edge + width) return 1.0;
  const double t = (f - (edge - width)) / (2.0 * width);
  return 0.5 * (1.0 - std::cos(kPi * t));
}

}  // namespace

OctaveFilterbank OctaveFilterbank::design(double sample_rate,
                                          int fir_length) {
  if (fir_length % 2 == 0 || fir_length < 63) {
    throw std::invalid_argument("filterbank fir_length must be odd and >= 63");
  }
  const double nyquist = sample_rate / 2.0;
  // Interior edges at the geometric midpoints between octave centers.
  std::array<double, kBandCount + 1> edges;
  edges[0] = 0.0;
  for (int b = 1; b < kBandCount; ++b) {
    edges[b] = kBandCentersHz[b - 1] * std::sqrt(2.0);
  }
  edges[kBandCount] = nyquist;
  if (edges[kBandCount - 1] >= nyquist) {
    throw std::invalid_argument(
        "sample rate too low to cover the 7 octave bands");
  }

  OctaveFilterbank fb;
  fb.sample_rate_ = sample_rate;
  fb.fir_length_ = fir_length;

  const std::size_t half = kDesignFft / 2;
  const double bin_hz = sample_rate / static_cast<double>(kDesignFft);
  for (int b = 0; b < kBandCount; ++b) {
    // Zero-phase real spectrum; complementary masks sum to one.
    std::vector<std::complex<double>> spec(kDesignFft);
    for (std::size_t k = 0; k <= half; ++k) {
      const double f = k * bin_hz;
      const double lo =
          (b == 0) ? 1.0
                   : rising_edge(f, edges[b],
                                 std::max(0.15 * edges[b], 30.0));
      const double hi =
          (b == kBandCount - 1)
              ? 0.0
              : rising_edge(f, edges[b + 1],
                            std::max(0.15 * edges[b + 1], 30.0));
      const double mask = lo - hi;
      spec[k] = mask;
      if (k > 0 && k < half) spec[kDesignFft - k] = mask;
    }
    fft_inplace(spec, true);

    // Center the impulse response and apply a symmetric Hann window.
    std::vector<double> fir(fir_length);
    const int delay = fir_length / 2;
    for (int i = 0; i < fir_length; ++i) {
      const int n = i - delay;
      const std::size_t idx =
          static_cast<std::size_t>((n % static_cast<int>(kDesignFft) +
                                    static_cast<int>(kDesignFft)) %
                                   static_cast<int>(kDesignFft));
      const double w =
          0.5 * (1.0 + std::cos(kPi * static_cast<double>(n) /
                                static_cast<double>(delay + 1)));
      fir[i] = spec[idx].real() * w;
    }
    fb.firs_[b] = std::move(fir);
  }
  return fb;
}

std::vector<double> OctaveFilterbank::apply(int band,
                                            std::span<const double> x) const {
  return fft_convolve(x, firs_.at(band));
}

}  // namespace seldkit
