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

#include "seldkit/material.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "seldkit/common.hpp"

namespace seldkit {

void Material::validate() const {
  if (name.empty()) throw std::invalid_argument("material without a name");
  for (double a : absorption) {
    if (!(a > 0.0) || a > 1.0) {
      throw std::invalid_argument("material '" + name +
                                  "': absorption must be in (0, 1]");
    }
  }
}

MaterialDb MaterialDb::builtin() {
  MaterialDb db;
  const auto add = [&db](const char* name,
                         std::array<double, kBandCount> a) {
    db.add(Material{name, a});
  };
  add("carpet_medium", {0.08, 0.12, 0.20, 0.30, 0.45, 0.55, 0.55});
  add("acoustic_tile_thin", {0.20, 0.28, 0.33, 0.31, 0.40, 0.45, 0.45});
  add("heavy_curtain", {0.14, 0.25, 0.35, 0.31, 0.40, 0.35, 0.35});
  add("upholstered_seating", {0.15, 0.25, 0.30, 0.30, 0.33, 0.35, 0.35});
  add("perforated_wood_panel", {0.20, 0.33, 0.35, 0.29, 0.27, 0.25, 0.22});
  add("acoustic_plaster", {0.15, 0.25, 0.32, 0.30, 0.32, 0.35, 0.35});
  add("fabric_wrapped_panel", {0.15, 0.30, 0.35, 0.32, 0.35, 0.35, 0.33});
  add("cork_wall_tiles", {0.10, 0.18, 0.28, 0.29, 0.33, 0.35, 0.35});
  return db;
}

MaterialDb MaterialDb::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open material database: " + path);
  MaterialDb db;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    Material m;
    if (!(row >> m.name)) continue;  // blank line
    for (int b = 0; b < kBandCount; ++b) {
      if (!(row >> m.absorption[b])) {
        throw ConfigError(path + ":" + std::to_string(line_no) +
                          ": expected 7 absorption coefficients");
      }
    }
    double extra;
    if (row >> extra) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": trailing fields after 7 coefficients");
    }
    db.add(std::move(m));
  }
  if (db.empty()) throw ConfigError("material database is empty: " + path);
  return db;
}

void MaterialDb::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot create material database: " + path);
  out << "# name  a125 a250 a500 a1000 a2000 a4000 a8000\n";
  for (const auto& m : materials_) {
    out << m.name;
    for (double a : m.absorption) out << ' ' << a;
    out << '\n';
  }
}

void MaterialDb::add(Material m) {
  m.validate();
  materials_.push_back(std::move(m));
}

}  // namespace seldkit
