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

#include "seldkit/srir.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "seldkit/common.hpp"
#include "seldkit/fft.hpp"

namespace seldkit {

namespace {

constexpr int kSincTaps = 16;
constexpr double kMinImageDistance = 0.01;  // m

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  return std::sin(kPi * x) / (kPi * x);
}

}  // namespace

int max_order_for_t60(const RoomSpec& room, double t60_s) {
  const double horizon_m = 1.5 * t60_s * kSpeedOfSound;
  const double min_dim = std::min({room.dims.x, room.dims.y, room.dims.z});
  return static_cast<int>(std::ceil(horizon_m / min_dim)) + 1;
}

Srir render_foa_srir(const ImageSourceSet& images, const Vec3& array_pos,
                     double sample_rate, const OctaveFilterbank& bands) {
  if (sample_rate <= 0.0) {
    throw std::invalid_argument("render_foa_srir: sample rate must be > 0");
  }
  if (bands.sample_rate() != sample_rate) {
    throw std::invalid_argument(
        "render_foa_srir: filterbank sample rate mismatch");
  }
  if (images.images.empty()) {
    throw std::invalid_argument("render_foa_srir: empty image set");
  }

  double max_dist = 0.0;
  for (const auto& img : images.images) {
    const double d = (img.position - array_pos).norm();
    if (d < kMinImageDistance) {
      throw std::invalid_argument(
          "render_foa_srir: image coincides with the array");
    }
    max_dist = std::max(max_dist, d);
  }

  const std::size_t len =
      static_cast<std::size_t>(
          std::ceil(max_dist / kSpeedOfSound * sample_rate)) +
      kSincTaps + 2;

  // Band-by-channel accumulators for the broadband sinc impulses.
  std::array<std::array<std::vector<double>, 4>, kBandCount> acc;
  for (auto& per_band : acc) {
    for (auto& buf : per_band) buf.assign(len, 0.0);
  }

  const ImageSource* direct = &images.images.front();
  for (const auto& img : images.images) {
    if (img.order < direct->order) direct = &img;

    const Vec3 offset = img.position - array_pos;
    const double dist = offset.norm();
    const Vec3 u = offset.normalized();
    // First-order gains are exactly the unit arrival vector components.
    const std::array<double, 4> gains = {1.0, u.y, u.z, u.x};
    const double amp = img.phase_sign / dist;
    const double delay = dist / kSpeedOfSound * sample_rate;
    const int n0 = static_cast<int>(std::floor(delay));

    std::array<double, kSincTaps> taps;
    for (int i = 0; i < kSincTaps; ++i) {
      const int n = n0 - kSincTaps / 2 + 1 + i;
      const double t = static_cast<double>(n) - delay;
      const double w =
          0.5 * (1.0 + std::cos(2.0 * kPi * t / (kSincTaps + 1)));
      taps[i] = sinc(t) * w;
    }

    for (int b = 0; b < kBandCount; ++b) {
      const double gb = amp * img.band_gain[b];
      for (int ch = 0; ch < 4; ++ch) {
        const double a = gb * gains[ch];
        auto& buf = acc[b][ch];
        for (int i = 0; i < kSincTaps; ++i) {
          const int n = n0 - kSincTaps / 2 + 1 + i;
          if (n >= 0 && n < static_cast<int>(len)) buf[n] += a * taps[i];
        }
      }
    }
  }

  // Frequency-domain band synthesis: sum the band-filtered accumulators,
  // then drop the filterbank's linear-phase delay.
  const std::size_t fir_len = bands.fir(0).size();
  const std::size_t fft_size = next_pow2(len + fir_len - 1);
  std::array<std::vector<std::complex<double>>, kBandCount> fir_spectra;
  for (int b = 0; b < kBandCount; ++b) {
    fir_spectra[b] = rfft(bands.fir(b), fft_size);
  }

  Srir out;
  out.sample_rate = sample_rate;
  {
    const Vec3 u = (direct->position - array_pos).normalized();
    out.source_direction = unit_to_direction(u);
  }
  const std::size_t gd = static_cast<std::size_t>(bands.group_delay());
  // Keep the trailing filter ringing (gd extra samples) so the render is
  // the complete linear response of its image set.
  const std::size_t out_len = len + gd;
  for (int ch = 0; ch < 4; ++ch) {
    std::vector<std::complex<double>> sum(fft_size);
    for (int b = 0; b < kBandCount; ++b) {
      auto spec = rfft(acc[b][ch], fft_size);
      for (std::size_t i = 0; i < fft_size; ++i) {
        sum[i] += spec[i] * fir_spectra[b][i];
      }
    }
    fft_inplace(sum, true);
    out.channels[ch].assign(out_len, 0.0);
    for (std::size_t i = 0; i < out_len; ++i) {
      out.channels[ch][i] = sum[i + gd].real();
    }
  }
  return out;
}

}  // namespace seldkit
