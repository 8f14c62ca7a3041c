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

#include "seldkit/features.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "seldkit/fft.hpp"

namespace seldkit {

Spectrogram stft(std::span<const double> signal, const StftParams& params) {
  if (params.hop == 0 || params.hop > params.window ||
      params.fft < params.window) {
    throw std::invalid_argument("stft: inconsistent window/hop/fft sizes");
  }

  std::vector<double> padded;
  std::span<const double> x = signal;
  if (params.center_pad) {
    padded.assign(signal.size() + params.window, 0.0);
    std::copy(signal.begin(), signal.end(),
              padded.begin() + static_cast<std::ptrdiff_t>(params.window / 2));
    x = padded;
  }
  if (x.size() < params.window) {
    throw std::invalid_argument("stft: signal shorter than one window");
  }

  // Periodic Hann.
  std::vector<double> win(params.window);
  for (std::size_t n = 0; n < params.window; ++n) {
    win[n] = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(n) /
                                   static_cast<double>(params.window)));
  }

  Spectrogram out;
  out.frames = 1 + (x.size() - params.window) / params.hop;
  out.bins = params.bins();
  out.data.resize(out.frames * out.bins);

  std::vector<std::complex<double>> buf(params.fft);
  for (std::size_t t = 0; t < out.frames; ++t) {
    const std::size_t start = t * params.hop;
    std::fill(buf.begin(), buf.end(), std::complex<double>{});
    for (std::size_t n = 0; n < params.window; ++n) {
      buf[n] = win[n] * x[start + n];
    }
    fft_inplace(buf, false);
    for (std::size_t f = 0; f < out.bins; ++f) out.at(t, f) = buf[f];
  }
  return out;
}

namespace {

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

}  // namespace

MelFilterbank MelFilterbank::design(double sample_rate, std::size_t n_mels,
                                    std::size_t fft) {
  MelFilterbank mb;
  mb.n_mels_ = n_mels;
  mb.bins_ = fft / 2 + 1;
  mb.weights_.assign(n_mels * mb.bins_, 0.0);

  const double nyquist = sample_rate / 2.0;
  const double mel_max = hz_to_mel(nyquist);
  std::vector<double> edges_hz(n_mels + 2);
  for (std::size_t i = 0; i < edges_hz.size(); ++i) {
    edges_hz[i] =
        mel_to_hz(mel_max * static_cast<double>(i) /
                  static_cast<double>(n_mels + 1));
  }

  const double bin_hz = sample_rate / static_cast<double>(fft);
  for (std::size_t m = 0; m < n_mels; ++m) {
    const double lo = edges_hz[m];
    const double mid = edges_hz[m + 1];
    const double hi = edges_hz[m + 2];
    for (std::size_t f = 0; f < mb.bins_; ++f) {
      const double hz = f * bin_hz;
      double w = 0.0;
      if (hz >= lo && hz <= mid && mid > lo) {
        w = (hz - lo) / (mid - lo);
      } else if (hz > mid && hz <= hi && hi > mid) {
        w = (hi - hz) / (hi - mid);
      }
      mb.weights_[m * mb.bins_ + f] = w;
    }
    // Narrow low bands can miss every bin center; keep the band non-empty
    // by claiming its nearest bin.
    double row_sum = 0.0;
    for (std::size_t f = 0; f < mb.bins_; ++f) {
      row_sum += mb.weights_[m * mb.bins_ + f];
    }
    if (row_sum == 0.0) {
      const auto f =
          static_cast<std::size_t>(std::llround(mid / bin_hz));
      mb.weights_[m * mb.bins_ + std::min(f, mb.bins_ - 1)] = 1.0;
    }
  }
  return mb;
}

void MelFilterbank::pool(std::span<const double> linear,
                         std::span<double> mel) const {
  for (std::size_t m = 0; m < n_mels_; ++m) {
    double acc = 0.0;
    const double* row = &weights_[m * bins_];
    for (std::size_t f = 0; f < bins_; ++f) acc += row[f] * linear[f];
    mel[m] = acc;
  }
}

Tensor logmel(const Spectrogram& spec, const MelFilterbank& mel,
              double power_floor) {
  if (spec.bins != mel.bins()) {
    throw std::invalid_argument("logmel: filterbank/spectrogram bin mismatch");
  }
  Tensor out({spec.frames, mel.n_mels()});
  std::vector<double> power(spec.bins);
  std::vector<double> pooled(mel.n_mels());
  for (std::size_t t = 0; t < spec.frames; ++t) {
    for (std::size_t f = 0; f < spec.bins; ++f) {
      power[f] = std::norm(spec.at(t, f));
    }
    mel.pool(power, pooled);
    for (std::size_t m = 0; m < mel.n_mels(); ++m) {
      out.at({t, m}) = std::log10(std::max(pooled[m], power_floor));
    }
  }
  return out;
}

Tensor intensity_vectors(const std::array<Spectrogram, 4>& foa_spec,
                         const MelFilterbank& mel, double eps) {
  const Spectrogram& w = foa_spec[kW];
  for (const auto& s : foa_spec) {
    if (s.frames != w.frames || s.bins != w.bins) {
      throw std::invalid_argument("intensity_vectors: channel shape mismatch");
    }
  }
  if (w.bins != mel.bins()) {
    throw std::invalid_argument(
        "intensity_vectors: filterbank/spectrogram bin mismatch");
  }

  const std::size_t n_mels = mel.n_mels();
  Tensor out({w.frames, n_mels, 3});
  std::vector<double> ix(w.bins), iy(w.bins), iz(w.bins), en(w.bins);
  std::vector<double> pix(n_mels), piy(n_mels), piz(n_mels), pen(n_mels);
  for (std::size_t t = 0; t < w.frames; ++t) {
    for (std::size_t f = 0; f < w.bins; ++f) {
      const auto cw = std::conj(w.at(t, f));
      const auto x = foa_spec[kX].at(t, f);
      const auto y = foa_spec[kY].at(t, f);
      const auto z = foa_spec[kZ].at(t, f);
      ix[f] = (cw * x).real();
      iy[f] = (cw * y).real();
      iz[f] = (cw * z).real();
      en[f] = std::norm(w.at(t, f)) +
              (std::norm(x) + std::norm(y) + std::norm(z)) / 3.0;
    }
    mel.pool(ix, pix);
    mel.pool(iy, piy);
    mel.pool(iz, piz);
    mel.pool(en, pen);
    for (std::size_t m = 0; m < n_mels; ++m) {
      const double denom = pen[m] + eps;
      out.at({t, m, 0}) = pix[m] / denom;
      out.at({t, m, 1}) = piy[m] / denom;
      out.at({t, m, 2}) = piz[m] / denom;
    }
  }
  return out;
}

FeatureBlock extract_features(const FoaClip& clip, const StftParams& params,
                              std::size_t n_mels) {
  if (clip.sample_rate != params.sample_rate) {
    throw std::invalid_argument("extract_features: sample rate mismatch");
  }
  std::array<Spectrogram, 4> specs;
  for (int ch = 0; ch < 4; ++ch) {
    specs[ch] = stft(clip.channels[ch], params);
  }
  const MelFilterbank mel =
      MelFilterbank::design(params.sample_rate, n_mels, params.fft);

  FeatureBlock block;
  block.logmel = Tensor({4, specs[0].frames, n_mels});
  for (int ch = 0; ch < 4; ++ch) {
    const Tensor lm = logmel(specs[ch], mel);
    for (std::size_t t = 0; t < specs[0].frames; ++t) {
      for (std::size_t m = 0; m < n_mels; ++m) {
        block.logmel.at({static_cast<std::size_t>(ch), t, m}) = lm.at({t, m});
      }
    }
  }
  block.intensity = intensity_vectors(specs, mel);
  return block;
}

namespace {

// Raw (unnormalized) intensity accumulated over a frame range.
Vec3 accumulate_intensity(const std::array<Spectrogram, 4>& specs,
                          std::size_t t_begin, std::size_t t_end) {
  Vec3 acc;
  for (std::size_t t = t_begin; t < t_end; ++t) {
    for (std::size_t f = 0; f < specs[kW].bins; ++f) {
      const auto cw = std::conj(specs[kW].at(t, f));
      acc.x += (cw * specs[kX].at(t, f)).real();
      acc.y += (cw * specs[kY].at(t, f)).real();
      acc.z += (cw * specs[kZ].at(t, f)).real();
    }
  }
  return acc;
}

}  // namespace

Direction estimate_direction(const FoaClip& clip, const StftParams& params) {
  std::array<Spectrogram, 4> specs;
  for (int ch = 0; ch < 4; ++ch) specs[ch] = stft(clip.channels[ch], params);
  const Vec3 mean = accumulate_intensity(specs, 0, specs[kW].frames);
  return unit_to_direction(mean);
}

std::vector<Vec3> framewise_intensity(const FoaClip& clip,
                                      const StftParams& params,
                                      double frame_hop_s) {
  std::array<Spectrogram, 4> specs;
  for (int ch = 0; ch < 4; ++ch) specs[ch] = stft(clip.channels[ch], params);
  const double stft_per_label =
      frame_hop_s * params.sample_rate / static_cast<double>(params.hop);
  const auto n_labels = static_cast<std::size_t>(
      std::ceil(static_cast<double>(specs[kW].frames) / stft_per_label));
  std::vector<Vec3> out(n_labels);
  for (std::size_t i = 0; i < n_labels; ++i) {
    const auto t0 = static_cast<std::size_t>(
        std::llround(static_cast<double>(i) * stft_per_label));
    const auto t1 = std::min<std::size_t>(
        specs[kW].frames,
        static_cast<std::size_t>(
            std::llround(static_cast<double>(i + 1) * stft_per_label)));
    out[i] = accumulate_intensity(specs, t0, t1);
  }
  return out;
}

Tensor pack_feature_block(const FeatureBlock& block) {
  const std::size_t t = block.frames();
  const std::size_t m = block.mels();
  Tensor packed({7, t, m});
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        packed.at({c, i, j}) = block.logmel.at({c, i, j});
      }
    }
  }
  for (std::size_t d = 0; d < 3; ++d) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        packed.at({4 + d, i, j}) = block.intensity.at({i, j, d});
      }
    }
  }
  return packed;
}

FeatureBlock unpack_feature_block(const Tensor& packed) {
  if (packed.rank() != 3 || packed.dim(0) != 7) {
    throw std::invalid_argument("unpack_feature_block: expected (7, T, M)");
  }
  const std::size_t t = packed.dim(1);
  const std::size_t m = packed.dim(2);
  FeatureBlock block;
  block.logmel = Tensor({4, t, m});
  block.intensity = Tensor({t, m, 3});
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        block.logmel.at({c, i, j}) = packed.at({c, i, j});
      }
    }
  }
  for (std::size_t d = 0; d < 3; ++d) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        block.intensity.at({i, j, d}) = packed.at({4 + d, i, j});
      }
    }
  }
  return block;
}

}  // namespace seldkit
