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

#ifndef SELDKIT_FEATURES_HPP_
#define SELDKIT_FEATURES_HPP_

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "seldkit/ambisonics.hpp"
#include "seldkit/audio.hpp"
#include "seldkit/tensor.hpp"

namespace seldkit {

struct StftParams {
  double sample_rate = kDefaultSampleRate;
  std::size_t window = 1024;
  std::size_t hop = 240;
  std::size_t fft = 1024;
  bool center_pad = false;  // default: no padding, frames fully inside

  std::size_t bins() const { return fft / 2 + 1; }
};

// One channel of complex spectra, frames x bins, row-major.
struct Spectrogram {
  std::size_t frames = 0;
  std::size_t bins = 0;
  std::vector<std::complex<double>> data;

  std::complex<double>& at(std::size_t t, std::size_t f) {
    return data[t * bins + f];
  }
  const std::complex<double>& at(std::size_t t, std::size_t f) const {
    return data[t * bins + f];
  }
};

// Hann-windowed transform; frames = 1 + floor((N - window) / hop) without
// padding. Throws std::invalid_argument for signals shorter than a window.
Spectrogram stft(std::span<const double> signal, const StftParams& params);

// 64-band triangular HTK-mel filterbank over [0, sample_rate/2].
class MelFilterbank {
 public:
  static MelFilterbank design(double sample_rate, std::size_t n_mels,
                              std::size_t fft);

  std::size_t n_mels() const { return n_mels_; }
  std::size_t bins() const { return bins_; }
  // Weight of linear bin `f` in mel band `m`.
  double weight(std::size_t m, std::size_t f) const {
    return weights_[m * bins_ + f];
  }
  // Pools a length-`bins` nonnegative row into `n_mels` values.
  void pool(std::span<const double> linear, std::span<double> mel) const;

 private:
  std::size_t n_mels_ = 0;
  std::size_t bins_ = 0;
  std::vector<double> weights_;
};

// log10 of mel-pooled power with the floor applied; shape (T, n_mels).
Tensor logmel(const Spectrogram& spec, const MelFilterbank& mel,
              double power_floor = 1e-10);

// Mel-pooled active intensity per frame, shape (T, n_mels, 3) in (x, y, z)
// order, normalized by the mel-pooled total energy so norms stay <= 1.
Tensor intensity_vectors(const std::array<Spectrogram, 4>& foa_spec,
                         const MelFilterbank& mel, double eps = 1e-10);

// Network input block: per-channel log-mels plus intensity vectors.
struct FeatureBlock {
  Tensor logmel;     // (4, T, n_mels)
  Tensor intensity;  // (T, n_mels, 3)

  std::size_t frames() const {
    return logmel.rank() == 3 ? logmel.dim(1) : 0;
  }
  std::size_t mels() const {
    return logmel.rank() == 3 ? logmel.dim(2) : 0;
  }
};

FeatureBlock extract_features(const FoaClip& clip, const StftParams& params,
                              std::size_t n_mels = 64);

// Energy-weighted mean intensity direction over the whole clip.
Direction estimate_direction(const FoaClip& clip,
                             const StftParams& params = {});

// Same estimate per label frame (frame_hop_s groups of STFT frames);
// frames with no energy report a zero vector.
std::vector<Vec3> framewise_intensity(const FoaClip& clip,
                                      const StftParams& params,
                                      double frame_hop_s = kLabelHopSeconds);

// Flattens to the (4 + 3, T, n_mels) container layout and back.
Tensor pack_feature_block(const FeatureBlock& block);
FeatureBlock unpack_feature_block(const Tensor& packed);

}  // namespace seldkit

#endif  // SELDKIT_FEATURES_HPP_
