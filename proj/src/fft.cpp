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

#include "seldkit/fft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "seldkit/common.hpp"

namespace seldkit {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("fft size must be a power of two");
  }

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * kPi / static_cast<double>(len) *
                       (inverse ? 1.0 : -1.0);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }

  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv_n;
  }
}

std::vector<std::complex<double>> rfft(std::span<const double> x,
                                       std::size_t n) {
  std::vector<std::complex<double>> a(n);
  const std::size_t m = std::min(x.size(), n);
  for (std::size_t i = 0; i < m; ++i) a[i] = x[i];
  fft_inplace(a, false);
  return a;
}

namespace {

// Single-block convolution; fft_size must hold la+lb-1.
void convolve_block(std::span<const double> a, std::span<const double> b,
                    std::size_t fft_size, std::vector<double>& out) {
  std::vector<std::complex<double>> fa = rfft(a, fft_size);
  const std::vector<std::complex<double>> fb = rfft(b, fft_size);
  for (std::size_t i = 0; i < fft_size; ++i) fa[i] *= fb[i];
  fft_inplace(fa, true);
  out.assign(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fa[i].real();
}

}  // namespace

std::vector<double> fft_convolve(std::span<const double> a,
                                 std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  std::span<const double> sig = a.size() >= b.size() ? a : b;
  std::span<const double> ker = a.size() >= b.size() ? b : a;

  const std::size_t full = next_pow2(sig.size() + ker.size() - 1);
  constexpr std::size_t kMaxBlock = std::size_t{1} << 18;
  if (full <= kMaxBlock) {
    std::vector<double> out;
    convolve_block(sig, ker, full, out);
    return out;
  }

  // Uniform-partition overlap-add over the signal.
  const std::size_t fft_size =
      std::max(next_pow2(4 * ker.size()), std::size_t{8192});
  const std::size_t seg = fft_size - ker.size() + 1;
  std::vector<double> out(sig.size() + ker.size() - 1, 0.0);
  std::vector<std::complex<double>> fker = rfft(ker, fft_size);
  std::vector<std::complex<double>> fa(fft_size);
  for (std::size_t start = 0; start < sig.size(); start += seg) {
    const std::size_t len = std::min(seg, sig.size() - start);
    std::fill(fa.begin(), fa.end(), std::complex<double>{});
    for (std::size_t i = 0; i < len; ++i) fa[i] = sig[start + i];
    fft_inplace(fa, false);
    for (std::size_t i = 0; i < fft_size; ++i) fa[i] *= fker[i];
    fft_inplace(fa, true);
    const std::size_t tail = std::min(len + ker.size() - 1,
                                      out.size() - start);
    for (std::size_t i = 0; i < tail; ++i) out[start + i] += fa[i].real();
  }
  return out;
}

}  // namespace seldkit
