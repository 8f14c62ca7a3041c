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

#ifndef SELDKIT_WAV_HPP_
#define SELDKIT_WAV_HPP_

#include <string>
#include <vector>

namespace seldkit {

struct WavData {
  double sample_rate = 0.0;
  std::vector<std::vector<double>> channels;  // [channel][sample]

  std::size_t frame_count() const {
    return channels.empty() ? 0 : channels[0].size();
  }
};

// Reads RIFF/WAVE; accepts 16-bit PCM and 32-bit IEEE float payloads.
WavData read_wav(const std::string& path);

// Writes 32-bit IEEE float PCM, one chunk per spec: fmt (code 3) + data.
void write_wav(const std::string& path, const WavData& wav);

}  // namespace seldkit

#endif  // SELDKIT_WAV_HPP_
