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

#ifndef SELDKIT_MATERIAL_HPP_
#define SELDKIT_MATERIAL_HPP_

#include <array>
#include <string>
#include <vector>

namespace seldkit {

inline constexpr int kBandCount = 7;
inline constexpr std::array<double, kBandCount> kBandCentersHz = {
    125.0, 250.0, 500.0, 1000.0, 2000.0, 4000.0, 8000.0};

// Absorption coefficients per octave band, each strictly in (0, 1].
struct Material {
  std::string name;
  std::array<double, kBandCount> absorption{};

  void validate() const;
};

class MaterialDb {
 public:
  // Furnished-room finishes; absorptive enough that horizon-complete image
  // source renders stay tractable (see the material file docs for harder
  // surfaces).
  static MaterialDb builtin();

  // Text format: one material per row, `name a125 a250 ... a8000`,
  // '#' starts a comment.
  static MaterialDb load(const std::string& path);
  void save(const std::string& path) const;

  void add(Material m);
  std::size_t size() const { return materials_.size(); }
  bool empty() const { return materials_.empty(); }
  const Material& at(std::size_t i) const { return materials_.at(i); }
  const std::vector<Material>& all() const { return materials_; }

 private:
  std::vector<Material> materials_;
};

}  // namespace seldkit

#endif  // SELDKIT_MATERIAL_HPP_
