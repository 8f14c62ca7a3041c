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

#include "seldkit/container.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "seldkit/common.hpp"

namespace seldkit {

namespace {

constexpr char kMagic[4] = {'S', 'K', 'T', 'B'};
constexpr std::uint32_t kVersion = 1;

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

}  // namespace

void write_tensor_file(const std::string& path, const Tensor& t,
                       const std::string& layout, bool as_float32) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create tensor file: " + path);
  out.write(kMagic, 4);
  write_le<std::uint32_t>(out, kVersion);
  write_le<std::uint32_t>(out, as_float32 ? 1u : 2u);
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(t.rank()));
  for (std::size_t d : t.shape()) write_le<std::uint64_t>(out, d);
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(layout.size()));
  out.write(layout.data(), static_cast<std::streamsize>(layout.size()));
  for (double v : t.data()) {
    if (as_float32) {
      write_le<float>(out, static_cast<float>(v));
    } else {
      write_le<double>(out, v);
    }
  }
  if (!out) throw IoError("short write: " + path);
}

TensorFile read_tensor_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open tensor file: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw IoError("bad tensor container magic: " + path);
  }
  const auto version = read_le<std::uint32_t>(in);
  if (version != kVersion) {
    throw IoError("unsupported container version in " + path);
  }
  const auto dtype = read_le<std::uint32_t>(in);
  if (dtype != 1 && dtype != 2) {
    throw IoError("unsupported container dtype in " + path);
  }
  const auto rank = read_le<std::uint32_t>(in);
  if (rank > 8) throw IoError("implausible tensor rank in " + path);
  std::vector<std::size_t> shape(rank);
  for (auto& d : shape) {
    d = static_cast<std::size_t>(read_le<std::uint64_t>(in));
  }
  const auto layout_len = read_le<std::uint32_t>(in);
  std::string layout(layout_len, '\0');
  in.read(layout.data(), layout_len);

  TensorFile tf;
  tf.layout = layout;
  tf.tensor = Tensor(shape);
  for (auto& v : tf.tensor.data()) {
    v = (dtype == 1) ? static_cast<double>(read_le<float>(in))
                     : read_le<double>(in);
  }
  if (!in) throw IoError("truncated tensor container: " + path);
  return tf;
}

}  // namespace seldkit
