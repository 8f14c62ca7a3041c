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

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <doctest.h>

#include "seldkit/audio.hpp"
#include "seldkit/image_source.hpp"
#include "seldkit/material.hpp"
#include "seldkit/reverb.hpp"
#include "seldkit/room.hpp"
#include "seldkit/rng.hpp"
#include "seldkit/srir.hpp"

using namespace seldkit;

namespace {

// Independent oracle: count L1-ball lattice points of radius <= N. The
// mirror construction maps every image to exactly one lattice point whose
// coordinate-wise absolute sum is the reflection order.
long lattice_ball_count(int n) {
  long count = 0;
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      for (int k = -n; k <= n; ++k) {
        if (std::abs(i) + std::abs(j) + std::abs(k) <= n) ++count;
      }
    }
  }
  return count;
}

Material uniform_material(const std::string& name, double alpha) {
  Material m;
  m.name = name;
  m.absorption.fill(alpha);
  return m;
}

RoomSpec box_room(Vec3 dims, double alpha) {
  RoomSpec room;
  room.dims = dims;
  for (auto& s : room.surfaces) s = uniform_material("uniform", alpha);
  room.array_position = {dims.x / 2.0, dims.y / 2.0, dims.z / 2.0};
  room.source_positions = {{dims.x / 2.0 + 1.0, dims.y / 2.0, dims.z / 2.0}};
  return room;
}

}  // namespace

TEST_CASE("image counts match the brute-force lattice oracle") {
  const RoomSpec room = box_room({4.2, 3.1, 2.9}, 0.3);
  const Vec3 src{1.1, 1.9, 1.2};
  // Frozen oracle values: 1, 7, 25, 63, 129.
  CHECK(lattice_ball_count(0) == 1);
  CHECK(lattice_ball_count(1) == 7);
  CHECK(lattice_ball_count(2) == 25);
  CHECK(lattice_ball_count(3) == 63);
  for (int order = 0; order <= 4; ++order) {
    const auto set = enumerate_image_sources(room, src, order);
    CHECK(set.size() == static_cast<std::size_t>(lattice_ball_count(order)));
  }
}

TEST_CASE("direct image keeps unit gains and the true position") {
  const RoomSpec room = box_room({5.0, 4.0, 3.0}, 0.4);
  const Vec3 src{2.0, 1.0, 1.5};
  const auto set = enumerate_image_sources(room, src, 2);
  bool found_direct = false;
  for (const auto& img : set.images) {
    if (img.order == 0) {
      found_direct = true;
      CHECK(img.position.x == doctest::Approx(src.x));
      CHECK(img.position.y == doctest::Approx(src.y));
      CHECK(img.position.z == doctest::Approx(src.z));
      for (double g : img.band_gain) CHECK(g == doctest::Approx(1.0));
    } else {
      // Every reflection multiplies by sqrt(1 - alpha) = sqrt(0.6).
      const double expected = std::pow(std::sqrt(0.6), img.order);
      for (double g : img.band_gain) CHECK(g == doctest::Approx(expected));
    }
  }
  CHECK(found_direct);
}

TEST_CASE("enumeration rejects sources outside the room") {
  const RoomSpec room = box_room({5.0, 4.0, 3.0}, 0.4);
  CHECK_THROWS_AS(enumerate_image_sources(room, {9.0, 1.0, 1.0}, 1),
                  std::invalid_argument);
}

TEST_CASE("sample_room is deterministic and respects bounds") {
  const MaterialDb db = MaterialDb::builtin();
  RoomBounds bounds;

  const RoomSpec a = sample_room(7, bounds, db);
  const RoomSpec b = sample_room(7, bounds, db);
  CHECK(a.dims.x == b.dims.x);
  CHECK(a.dims.y == b.dims.y);
  CHECK(a.dims.z == b.dims.z);
  CHECK(a.array_position.x == b.array_position.x);
  REQUIRE(a.source_positions.size() == b.source_positions.size());
  for (std::size_t i = 0; i < a.source_positions.size(); ++i) {
    CHECK(a.source_positions[i].x == b.source_positions[i].x);
  }
  for (int s = 0; s < 6; ++s) CHECK(a.surfaces[s].name == b.surfaces[s].name);

  SUBCASE("degenerate bounds pin the dimensions") {
    bounds.dim_min = bounds.dim_max = {5.0, 5.0, 5.0};
    const RoomSpec c = sample_room(3, bounds, db);
    CHECK(c.dims.x == doctest::Approx(5.0));
    CHECK(c.dims.y == doctest::Approx(5.0));
    CHECK(c.dims.z == doctest::Approx(5.0));
  }

  SUBCASE("a thousand samples satisfy the margin invariant") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const RoomSpec r = sample_room(seed, bounds, db);
      CHECK_NOTHROW(r.validate(bounds.wall_margin));
    }
  }

  SUBCASE("empty material database is a configuration error") {
    CHECK_THROWS_AS(sample_room(1, bounds, MaterialDb{}), ConfigError);
  }
}

TEST_CASE("octave filterbank sums to a pure delay") {
  const auto fb = OctaveFilterbank::design(24000.0);
  const int len = fb.fir_length();
  std::vector<double> total(len, 0.0);
  for (int b = 0; b < kBandCount; ++b) {
    for (int i = 0; i < len; ++i) total[i] += fb.fir(b)[i];
  }
  for (int i = 0; i < len; ++i) {
    const double expected = (i == fb.group_delay()) ? 1.0 : 0.0;
    CHECK(std::abs(total[i] - expected) <= 1e-12);
  }
}

TEST_CASE("single frontal image renders W equal to X") {
  const auto fb = OctaveFilterbank::design(24000.0);
  ImageSourceSet set;
  set.array_position = {0.0, 0.0, 0.0};
  ImageSource img;
  img.position = {1.0, 0.0, 0.0};
  img.order = 0;
  img.band_gain.fill(1.0);
  img.distance_m = 1.0;
  set.images.push_back(img);

  const Srir srir = render_foa_srir(set, set.array_position, 24000.0, fb);
  CHECK(srir.source_direction.azimuth_deg == doctest::Approx(0.0));
  CHECK(srir.source_direction.elevation_deg == doctest::Approx(0.0));

  double peak_w = 0.0;
  for (std::size_t i = 0; i < srir.length(); ++i) {
    CHECK(srir.channels[kX][i] ==
          doctest::Approx(srir.channels[kW][i]).epsilon(1e-9));
    CHECK(std::abs(srir.channels[kY][i]) <= 1e-9);
    CHECK(std::abs(srir.channels[kZ][i]) <= 1e-9);
    peak_w = std::max(peak_w, std::abs(srir.channels[kW][i]));
  }
  CHECK(peak_w == doctest::Approx(1.0).epsilon(0.02));

  SUBCASE("doubling the distance halves the peak") {
    ImageSourceSet far_set;
    far_set.array_position = {0.0, 0.0, 0.0};
    ImageSource far = img;
    far.position = {2.0, 0.0, 0.0};
    far.distance_m = 2.0;
    far_set.images.push_back(far);
    const Srir srir2 =
        render_foa_srir(far_set, far_set.array_position, 24000.0, fb);
    double peak2 = 0.0;
    for (double v : srir2.channels[kW]) peak2 = std::max(peak2, std::abs(v));
    CHECK(peak2 == doctest::Approx(peak_w / 2.0).epsilon(0.02));
  }

  SUBCASE("an image on top of the array is a domain error") {
    ImageSourceSet bad;
    bad.array_position = {0.0, 0.0, 0.0};
    ImageSource on_top = img;
    on_top.position = {0.001, 0.0, 0.0};
    bad.images.push_back(on_top);
    CHECK_THROWS_AS(render_foa_srir(bad, bad.array_position, 24000.0, fb),
                    std::invalid_argument);
  }
}

TEST_CASE("render is linear in the image set") {
  const auto fb = OctaveFilterbank::design(24000.0);
  Rng rng(11);
  const Vec3 array{0.0, 0.0, 0.0};

  ImageSourceSet all;
  all.array_position = array;
  std::vector<ImageSourceSet> singles;
  for (int i = 0; i < 5; ++i) {
    ImageSource img;
    img.position = {rng.uniform(0.5, 3.0), rng.uniform(-2.0, 2.0),
                    rng.uniform(-1.0, 1.0)};
    img.order = i;
    for (auto& g : img.band_gain) g = rng.uniform(0.2, 1.0);
    img.distance_m = img.position.norm();
    all.images.push_back(img);
    ImageSourceSet single;
    single.array_position = array;
    single.images.push_back(img);
    singles.push_back(single);
  }

  const Srir whole = render_foa_srir(all, array, 24000.0, fb);
  std::array<std::vector<double>, 4> sum;
  for (auto& ch : sum) ch.assign(whole.length(), 0.0);
  double scale = 0.0;
  for (const auto& single : singles) {
    const Srir part = render_foa_srir(single, array, 24000.0, fb);
    for (int ch = 0; ch < 4; ++ch) {
      for (std::size_t i = 0; i < part.length(); ++i) {
        sum[ch][i] += part.channels[ch][i];
      }
    }
  }
  for (int ch = 0; ch < 4; ++ch) {
    for (std::size_t i = 0; i < whole.length(); ++i) {
      scale = std::max(scale, std::abs(whole.channels[ch][i]));
    }
  }
  for (int ch = 0; ch < 4; ++ch) {
    for (std::size_t i = 0; i < whole.length(); ++i) {
      CHECK(std::abs(sum[ch][i] - whole.channels[ch][i]) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("schroeder estimate recovers a known analytic decay") {
  const double fs = 24000.0;
  const double t60 = 0.5;
  std::vector<double> rir(static_cast<std::size_t>(1.5 * fs));
  for (std::size_t i = 0; i < rir.size(); ++i) {
    const double t = static_cast<double>(i) / fs;
    // Energy envelope exp(-13.8155 t / T60); amplitude is its square root.
    rir[i] = std::exp(-0.5 * 13.815511 * t / t60);
  }
  const T60Estimate est = schroeder_t60(rir, fs);
  CHECK(est.flag == T60Estimate::Flag::kOk);
  CHECK(est.seconds == doctest::Approx(t60).epsilon(0.04));
  CHECK(std::abs(est.seconds - t60) <= 0.02);
}

TEST_CASE("schroeder flags degenerate and silent inputs") {
  const double fs = 24000.0;
  SUBCASE("anechoic impulse") {
    std::vector<double> rir(static_cast<std::size_t>(0.2 * fs), 0.0);
    rir[100] = 1.0;
    const T60Estimate est = schroeder_t60(rir, fs);
    CHECK(est.flag != T60Estimate::Flag::kOk);
    CHECK(est.seconds <= 0.01);
  }
  SUBCASE("silence is a domain error") {
    std::vector<double> rir(static_cast<std::size_t>(0.2 * fs), 0.0);
    CHECK_THROWS_AS(schroeder_t60(rir, fs), std::invalid_argument);
  }
  SUBCASE("too-short input is a domain error") {
    std::vector<double> rir(100, 1.0);
    CHECK_THROWS_AS(schroeder_t60(rir, fs), std::invalid_argument);
  }
}

TEST_CASE("eyring prediction on the uniform cube") {
  const RoomSpec room = box_room({5.0, 5.0, 5.0}, 0.3);
  const auto t60 = eyring_t60(room);
  // 0.161 * 125 / (150 * -ln(0.7)) = 0.376 s, frozen from the closed form.
  for (double t : t60) CHECK(t == doctest::Approx(0.37617).epsilon(1e-3));

  SUBCASE("more absorption gives strictly less reverberation") {
    const auto dead = eyring_t60(box_room({5.0, 5.0, 5.0}, 0.999));
    for (int b = 0; b < kBandCount; ++b) CHECK(dead[b] < t60[b]);
    CHECK(dead[0] < 0.03);
  }
  SUBCASE("total absorption is a domain error") {
    CHECK_THROWS_AS(eyring_t60(box_room({5.0, 5.0, 5.0}, 1.0)),
                    std::invalid_argument);
  }
}

TEST_CASE("rendered decay tracks the eyring prediction at 1 kHz") {
  // Room-level T60 is the median over the room's source positions, as in
  // spatially averaged reverberation measurement. Three rooms here to keep
  // unit tests quick; the acceptance suite runs the ten-room version.
  const MaterialDb db = MaterialDb::builtin();
  RoomBounds bounds;
  bounds.dim_min = {3.2, 3.2, 2.8};
  bounds.dim_max = {4.8, 4.8, 4.0};
  bounds.wall_margin = 0.6;
  const auto fb = OctaveFilterbank::design(24000.0);

  for (std::uint64_t seed : {11ULL, 21ULL, 31ULL}) {
    const RoomSpec room = sample_room(seed, bounds, db);
    const auto eyring = eyring_t60(room);
    const int order = max_order_for_t60(room, eyring[3]);
    std::vector<double> estimates;
    for (const auto& src : room.source_positions) {
      const auto images = enumerate_image_sources(room, src, order);
      const Srir srir =
          render_foa_srir(images, room.array_position, 24000.0, fb);
      const T60Report report = estimate_t60(srir);
      CHECK(report.bands[3].flag == T60Estimate::Flag::kOk);
      estimates.push_back(report.bands[3].seconds);
    }
    std::sort(estimates.begin(), estimates.end());
    const double median = 0.5 * (estimates[1] + estimates[2]);
    CHECK(std::abs(median - eyring[3]) <= 0.25 * eyring[3]);
  }
}
