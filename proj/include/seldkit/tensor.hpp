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

#ifndef SELDKIT_TENSOR_HPP_
#define SELDKIT_TENSOR_HPP_

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace seldkit {

// Dense row-major double tensor. Small and boring on purpose: the shapes in
// this project are a handful of dimensions and the math is hand-written.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape, double fill = 0.0)
      : shape_(std::move(shape)),
        data_(element_count(shape_), fill) {}

  static std::size_t element_count(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return shape.empty() ? 0 : n;
  }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t dim(std::size_t i) const { return shape_.at(i); }
  std::size_t size() const { return data_.size(); }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  double& at(std::initializer_list<std::size_t> idx) {
    return data_[flat_index(idx)];
  }
  double at(std::initializer_list<std::size_t> idx) const {
    return data_[flat_index(idx)];
  }

  double& operator[](std::size_t flat) { return data_[flat]; }
  double operator[](std::size_t flat) const { return data_[flat]; }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

 private:
  std::size_t flat_index(std::initializer_list<std::size_t> idx) const {
    if (idx.size() != shape_.size()) {
      throw std::invalid_argument("tensor index rank mismatch");
    }
    std::size_t flat = 0;
    std::size_t i = 0;
    for (std::size_t v : idx) {
      flat = flat * shape_[i] + v;
      ++i;
    }
    return flat;
  }

  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

}  // namespace seldkit

#endif  // SELDKIT_TENSOR_HPP_
