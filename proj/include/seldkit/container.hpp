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

#ifndef SELDKIT_CONTAINER_HPP_
#define SELDKIT_CONTAINER_HPP_

#include <string>

#include "seldkit/tensor.hpp"

namespace seldkit {

// Flat binary tensor container, little-endian:
//   magic "SKTB" | u32 version | u32 dtype (1=f32, 2=f64) | u32 rank |
//   u64 shape[rank] | u32 layout_len | layout bytes | payload
// `layout` is a free-form tag describing axis/channel order, e.g.
// "logmel[WYZX]+iv[xyz]" or "track,frame,class,xyz".
struct TensorFile {
  Tensor tensor;
  std::string layout;
};

void write_tensor_file(const std::string& path, const Tensor& t,
                       const std::string& layout, bool as_float32 = true);

TensorFile read_tensor_file(const std::string& path);

}  // namespace seldkit

#endif  // SELDKIT_CONTAINER_HPP_
