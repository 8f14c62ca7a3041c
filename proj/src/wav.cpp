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

#include "seldkit/wav.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "seldkit/common.hpp"

namespace seldkit {

namespace {

template <typename T>
T read_le(std::istream& in) {
  unsigned char buf[sizeof(T)];
  in.read(reinterpret_cast<char*>(buf), sizeof(T));
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  }
  T out;
  std::memcpy(&out, &v, sizeof(T));
  return out;
}

template <typename T>
void write_le(std::ostream& out, T value) {
  std::uint64_t v = 0;
  std::memcpy(&v, &value, sizeof(T));
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  }
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

}  // namespace

WavData read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open wav file: " + path);

  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0) {
    throw IoError("not a RIFF file: " + path);
  }
  read_le<std::uint32_t>(in);  // riff size
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0) {
    throw IoError("not a WAVE file: " + path);
  }

  std::uint16_t format = 0;
  std::uint16_t num_channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
  bool have_fmt = false;
  WavData wav;

  while (in) {
    in.read(tag, 4);
    if (!in) break;
    const auto chunk_size = read_le<std::uint32_t>(in);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      format = read_le<std::uint16_t>(in);
      num_channels = read_le<std::uint16_t>(in);
      sample_rate = read_le<std::uint32_t>(in);
      read_le<std::uint32_t>(in);  // byte rate
      read_le<std::uint16_t>(in);  // block align
      bits = read_le<std::uint16_t>(in);
      if (chunk_size > 16) in.seekg(chunk_size - 16, std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw IoError("wav data chunk before fmt: " + path);
      if (num_channels == 0) throw IoError("wav with zero channels: " + path);
      const std::size_t bytes_per_sample = bits / 8;
      const std::size_t frames =
          chunk_size / (bytes_per_sample * num_channels);
      wav.sample_rate = static_cast<double>(sample_rate);
      wav.channels.assign(num_channels, std::vector<double>(frames));
      for (std::size_t f = 0; f < frames; ++f) {
        for (std::size_t c = 0; c < num_channels; ++c) {
          double v = 0.0;
          if (format == 3 && bits == 32) {
            v = static_cast<double>(read_le<float>(in));
          } else if (format == 1 && bits == 16) {
            v = static_cast<double>(read_le<std::int16_t>(in)) / 32768.0;
          } else {
            throw IoError("unsupported wav encoding (format " +
                          std::to_string(format) + ", " +
                          std::to_string(bits) + " bit): " + path);
          }
          wav.channels[c][f] = v;
        }
      }
      return wav;
    } else {
      in.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }
  throw IoError("wav file has no data chunk: " + path);
}

void write_wav(const std::string& path, const WavData& wav) {
  if (wav.channels.empty()) {
    throw std::invalid_argument("write_wav: no channels");
  }
  const std::size_t frames = wav.frame_count();
  for (const auto& ch : wav.channels) {
    if (ch.size() != frames) {
      throw std::invalid_argument("write_wav: channel length mismatch");
    }
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create wav file: " + path);

  const auto num_channels = static_cast<std::uint16_t>(wav.channels.size());
  const auto sample_rate = static_cast<std::uint32_t>(wav.sample_rate);
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(frames * num_channels * 4);

  out.write("RIFF", 4);
  write_le<std::uint32_t>(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_le<std::uint32_t>(out, 16);
  write_le<std::uint16_t>(out, 3);  // IEEE float
  write_le<std::uint16_t>(out, num_channels);
  write_le<std::uint32_t>(out, sample_rate);
  write_le<std::uint32_t>(out, sample_rate * num_channels * 4);
  write_le<std::uint16_t>(out, static_cast<std::uint16_t>(num_channels * 4));
  write_le<std::uint16_t>(out, 32);
  out.write("data", 4);
  write_le<std::uint32_t>(out, data_bytes);
  for (std::size_t f = 0; f < frames; ++f) {
    for (std::size_t c = 0; c < num_channels; ++c) {
      write_le<float>(out, static_cast<float>(wav.channels[c][f]));
    }
  }
  if (!out) throw IoError("short write: " + path);
}

}  // namespace seldkit
