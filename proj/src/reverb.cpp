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

#include "seldkit/reverb.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace seldkit {

T60Estimate schroeder_t60(std::span<const double> impulse_response,
                          double sample_rate) {
  const std::size_t n = impulse_response.size();
  if (sample_rate <= 0.0 || static_cast<double>(n) / sample_rate < 0.1) {
    throw std::invalid_argument(
        "schroeder_t60: impulse response shorter than 0.1 s");
  }

  // Backward-integrated energy decay curve.
  std::vector<double> edc(n);
  double acc = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    const double v = impulse_response[i];
    acc += v * v;
    edc[i] = acc;
  }
  if (!(acc > 0.0)) {
    throw std::invalid_argument("schroeder_t60: silent impulse response");
  }

  // Decay level in dB relative to the total energy.
  std::vector<double> level(n);
  for (std::size_t i = 0; i < n; ++i) {
    level[i] = edc[i] > 0.0 ? 10.0 * std::log10(edc[i] / acc) : -400.0;
  }

  std::size_t t5 = n;
  std::size_t t25 = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (t5 == n && level[i] <= -5.0) t5 = i;
    if (level[i] <= -25.0) {
      t25 = i;
      break;
    }
  }

  T60Estimate est;
  if (t5 == n) {
    est.flag = T60Estimate::Flag::kLowerBound;
    est.seconds = static_cast<double>(n) / sample_rate;
    return est;
  }
  std::size_t fit_end = t25;
  if (t25 == n) {
    est.flag = T60Estimate::Flag::kLowerBound;
    fit_end = n - 1;
  }

  // Least-squares line over the fit window, slope in dB/s.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t count = 0;
  for (std::size_t i = t5; i <= fit_end; ++i) {
    const double t = static_cast<double>(i) / sample_rate;
    sx += t;
    sy += level[i];
    sxx += t * t;
    sxy += t * level[i];
    ++count;
  }
  const double denom = count * sxx - sx * sx;
  if (count < 2 || denom <= 0.0) {
    est.flag = T60Estimate::Flag::kDegenerate;
    est.seconds =
        3.0 * static_cast<double>(fit_end - t5) / sample_rate;
    return est;
  }
  const double slope = (count * sxy - sx * sy) / denom;
  if (!(slope < 0.0)) {
    est.flag = T60Estimate::Flag::kDegenerate;
    est.seconds =
        3.0 * static_cast<double>(fit_end - t5) / sample_rate;
    return est;
  }
  est.seconds = -60.0 / slope;
  return est;
}

T60Report estimate_t60(const Srir& rir) {
  const auto& w = rir.channels[0];
  T60Report report;
  report.broadband = schroeder_t60(w, rir.sample_rate);
  // Shorter analysis FIR than the render bank: its ringing adds to the
  // measured decay, which matters for sub-200 ms rooms.
  const OctaveFilterbank fb = OctaveFilterbank::design(rir.sample_rate, 513);
  const std::size_t gd = static_cast<std::size_t>(fb.group_delay());
  for (int b = 0; b < kBandCount; ++b) {
    std::vector<double> filtered = fb.apply(b, w);
    // Drop the linear-phase delay so band and broadband time axes match.
    filtered.erase(filtered.begin(),
                   filtered.begin() + static_cast<std::ptrdiff_t>(gd));
    filtered.resize(w.size());
    report.bands[b] = schroeder_t60(filtered, rir.sample_rate);
  }
  return report;
}

std::array<double, kBandCount> eyring_t60(const RoomSpec& room) {
  const auto areas = room.surface_areas();
  double total_area = 0.0;
  for (double a : areas) total_area += a;
  const double volume = room.volume();

  std::array<double, kBandCount> t60{};
  for (int b = 0; b < kBandCount; ++b) {
    double mean_alpha = 0.0;
    for (int s = 0; s < 6; ++s) {
      mean_alpha += areas[s] * room.surfaces[s].absorption[b];
    }
    mean_alpha /= total_area;
    if (mean_alpha >= 1.0) {
      throw std::invalid_argument(
          "eyring_t60: mean absorption reaches 1 in band " +
          std::to_string(b));
    }
    t60[b] = 0.161 * volume / (-total_area * std::log(1.0 - mean_alpha));
  }
  return t60;
}

}  // namespace seldkit
