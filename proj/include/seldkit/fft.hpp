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

#ifndef SELDKIT_FFT_HPP_
#define SELDKIT_FFT_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace seldkit {

std::size_t next_pow2(std::size_t n);

// In-place iterative radix-2 transform; size must be a power of two.
// The inverse includes the 1/N normalization.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

// Forward transform of a real signal zero-padded to n (power of two).
std::vector<std::complex<double>> rfft(std::span<const double> x,
                                       std::size_t n);

// Full linear convolution (length a+b-1). Long signals are processed with
// uniformly partitioned overlap-add so memory stays bounded.
std::vector<double> fft_convolve(std::span<const double> a,
                                 std::span<const double> b);

}  // namespace seldkit

#endif  // SELDKIT_FFT_HPP_
