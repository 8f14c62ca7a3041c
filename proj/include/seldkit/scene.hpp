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

#ifndef SELDKIT_SCENE_HPP_
#define SELDKIT_SCENE_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

#include "seldkit/common.hpp"
#include "seldkit/geometry.hpp"

namespace seldkit {

// A monophonic source clip from the sample pool.
struct EventSample {
  std::vector<double> samples;
  double sample_rate = kDefaultSampleRate;
  int class_id = 0;

  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Source path at fixed 100 ms hops. Static trajectories hold one waypoint.
struct Waypoint {
  Direction direction;
  double distance_m = 1.5;
};

struct Trajectory {
  enum class Kind { kStatic, kMoving };
  Kind kind = Kind::kStatic;
  double hop_s = kLabelHopSeconds;
  std::vector<Waypoint> waypoints;

  bool is_static() const { return kind == Kind::kStatic; }

  const Waypoint& waypoint_at(std::size_t hop_index) const {
    if (is_static() || waypoints.size() == 1) return waypoints.front();
    return waypoints[hop_index < waypoints.size() ? hop_index
                                                  : waypoints.size() - 1];
  }
};

struct ScriptedEvent {
  int sample_index = 0;  // index into the planner's sample pool
  int class_id = 0;
  double onset_s = 0.0;
  double duration_s = 0.0;
  double gain_db = 0.0;
  Trajectory trajectory;
};

struct SceneScript {
  double clip_duration_s = 60.0;
  int max_polyphony = 1;
  std::vector<ScriptedEvent> events;
};

struct FrameEvent {
  int class_id = 0;
  int source_index = 0;
  double azimuth_deg = 0.0;
  double elevation_deg = 0.0;
};

// Frame-resolution annotations; frame f covers [f*hop, (f+1)*hop).
struct SceneMetadata {
  double frame_hop_s = kLabelHopSeconds;
  std::vector<std::vector<FrameEvent>> frames;

  std::size_t frame_count() const { return frames.size(); }

  std::size_t max_polyphony() const {
    std::size_t m = 0;
    for (const auto& f : frames) m = std::max(m, f.size());
    return m;
  }
};

inline std::size_t frames_for_duration(double duration_s,
                                       double hop_s = kLabelHopSeconds) {
  return static_cast<std::size_t>(std::llround(duration_s / hop_s));
}

}  // namespace seldkit

#endif  // SELDKIT_SCENE_HPP_
