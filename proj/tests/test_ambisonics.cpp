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

#include "seldkit/ambisonics.hpp"

#include <cmath>

#include <doctest.h>

#include "seldkit/rng.hpp"

using namespace seldkit;

namespace {

FoaClip noise_clip(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  FoaClip clip;
  clip.resize(n);
  for (auto& ch : clip.channels) {
    for (auto& v : ch) v = rng.normal();
  }
  return clip;
}

}  // namespace

TEST_CASE("foa gains at the cardinal directions") {
  const FoaGains front = foa_gains({0.0, 0.0});
  CHECK(front.w == doctest::Approx(1.0));
  CHECK(front.y == doctest::Approx(0.0));
  CHECK(front.z == doctest::Approx(0.0));
  CHECK(front.x == doctest::Approx(1.0));

  const FoaGains left = foa_gains({90.0, 0.0});
  CHECK(left.y == doctest::Approx(1.0));
  CHECK(left.x == doctest::Approx(0.0).epsilon(1e-12));

  const FoaGains up = foa_gains({0.0, 90.0});
  CHECK(up.z == doctest::Approx(1.0));
  CHECK(up.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(up.y == doctest::Approx(0.0));
}

TEST_CASE("foa gain norm identity over random directions") {
  Rng rng(99);
  for (int i = 0; i < 10000; ++i) {
    const Direction d{rng.uniform(-180.0, 180.0), rng.uniform(-90.0, 90.0)};
    const FoaGains g = foa_gains(d);
    CHECK(std::abs(g.y * g.y + g.z * g.z + g.x * g.x - 1.0) <= 1e-12);
    CHECK(g.w == 1.0);
  }
}

TEST_CASE("rotation by zero is the identity") {
  const FoaClip clip = noise_clip(1, 512);
  SceneMetadata meta;
  meta.frames.assign(4, {});
  meta.frames[1].push_back({2, 0, 30.0, -10.0});

  const auto [rotated, labels] = rotate_foa(clip, meta, {0.0, false});
  for (int ch = 0; ch < 4; ++ch) {
    for (std::size_t i = 0; i < clip.length(); ++i) {
      CHECK(rotated.channels[ch][i] == doctest::Approx(clip.channels[ch][i]));
    }
  }
  CHECK(labels.frames[1][0].azimuth_deg == doctest::Approx(30.0));
  CHECK(labels.frames[1][0].elevation_deg == doctest::Approx(-10.0));
}

TEST_CASE("rotation by 90 degrees swaps the horizontal channels") {
  const FoaClip clip = noise_clip(2, 256);
  SceneMetadata meta;
  meta.frames.assign(1, {});
  meta.frames[0].push_back({0, 0, 170.0, 5.0});

  const auto [rotated, labels] = rotate_foa(clip, meta, {90.0, false});
  for (std::size_t i = 0; i < clip.length(); ++i) {
    CHECK(rotated.channels[kX][i] ==
          doctest::Approx(-clip.channels[kY][i]).epsilon(1e-12));
    CHECK(rotated.channels[kY][i] ==
          doctest::Approx(clip.channels[kX][i]).epsilon(1e-12));
  }
  // 170 + 90 wraps into [-180, 180).
  CHECK(labels.frames[0][0].azimuth_deg == doctest::Approx(-100.0));
}

TEST_CASE("rotation round trip restores the clip") {
  const FoaClip clip = noise_clip(3, 1024);
  SceneMetadata meta;
  meta.frames.assign(2, {});
  meta.frames[0].push_back({1, 0, -45.0, 20.0});

  for (const auto& rot : rotation_presets()) {
    const auto [fwd, fwd_meta] = rotate_foa(clip, meta, rot);
    // The azimuth rotation and the Z flip commute, so the inverse is the
    // negated angle with the same flip.
    const RotationSpec inverse{wrap_azimuth_deg(-rot.azimuth_offset_deg),
                               rot.elevation_flip};
    const auto [back, back_meta] = rotate_foa(fwd, fwd_meta, inverse);
    for (int ch = 0; ch < 4; ++ch) {
      for (std::size_t i = 0; i < clip.length(); ++i) {
        CHECK(back.channels[ch][i] ==
              doctest::Approx(clip.channels[ch][i]).epsilon(1e-9));
      }
    }
    CHECK(back_meta.frames[0][0].azimuth_deg ==
          doctest::Approx(-45.0).epsilon(1e-9));
    CHECK(back_meta.frames[0][0].elevation_deg == doctest::Approx(20.0));
  }
}

TEST_CASE("rotation preserves W and the combined X/Y energy") {
  const FoaClip clip = noise_clip(4, 2048);
  SceneMetadata meta;
  meta.frames.assign(1, {});
  const auto [rotated, labels] = rotate_foa(clip, meta, {67.5, true});
  (void)labels;

  double exy_in = 0.0;
  double exy_out = 0.0;
  for (std::size_t i = 0; i < clip.length(); ++i) {
    CHECK(rotated.channels[kW][i] == clip.channels[kW][i]);
    exy_in += clip.channels[kX][i] * clip.channels[kX][i] +
              clip.channels[kY][i] * clip.channels[kY][i];
    exy_out += rotated.channels[kX][i] * rotated.channels[kX][i] +
               rotated.channels[kY][i] * rotated.channels[kY][i];
  }
  CHECK(exy_out == doctest::Approx(exy_in).epsilon(1e-9));
}

TEST_CASE("pseudo foa matches the flat directional gains") {
  Rng rng(5);
  std::vector<double> mono(256);
  for (auto& v : mono) v = rng.normal();

  SUBCASE("left-facing direction") {
    const FoaClip clip = pseudo_foa(mono, 24000.0, {90.0, 0.0});
    for (std::size_t i = 0; i < mono.size(); ++i) {
      CHECK(clip.channels[kW][i] == mono[i]);
      CHECK(clip.channels[kY][i] == doctest::Approx(mono[i]).epsilon(1e-12));
      CHECK(std::abs(clip.channels[kZ][i]) <= 1e-12);
      CHECK(std::abs(clip.channels[kX][i]) <= 1e-12 * std::abs(mono[i]) + 1e-15);
    }
  }
  SUBCASE("front direction equates W and X") {
    const FoaClip clip = pseudo_foa(mono, 24000.0, {0.0, 0.0});
    for (std::size_t i = 0; i < mono.size(); ++i) {
      CHECK(clip.channels[kX][i] == clip.channels[kW][i]);
    }
  }
  SUBCASE("per-sample norm identity for any direction") {
    const FoaClip clip = pseudo_foa(mono, 24000.0, {-132.0, 41.0});
    for (std::size_t i = 0; i < mono.size(); ++i) {
      const double lhs = clip.channels[kY][i] * clip.channels[kY][i] +
                         clip.channels[kZ][i] * clip.channels[kZ][i] +
                         clip.channels[kX][i] * clip.channels[kX][i];
      const double rhs = clip.channels[kW][i] * clip.channels[kW][i];
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("rotation presets cover 16 distinct variants") {
  const auto presets = rotation_presets();
  CHECK(presets.size() == 16);
  for (const auto& p : presets) {
    CHECK(p.azimuth_offset_deg >= -180.0);
    CHECK(p.azimuth_offset_deg < 180.0);
  }
}
