/*
 * Copyright 2026 The Gapnav Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GAPNAV_KINEMATICS_H_
#define GAPNAV_KINEMATICS_H_

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "gapnav/geometry.h"
#include "gapnav/grid.h"

namespace gapnav {

struct MotionLimits {
  double linear_speed_mps = 0.5;
  double angular_speed_dps = 90.0;
};

// Rotate-in-place followed by a straight translation. `samples[i]` is reached
// at `times[i]` seconds after the segment start.
struct MotionSegment {
  Pose start;
  Pose end;
  std::vector<Pose> samples;
  std::vector<double> times;
  double v_mps = 0.0;          // translation speed
  double omega_dps = 0.0;      // signed rotation rate
  double rotation_deg = 0.0;   // signed, in (-180, 180]
  double length_m = 0.0;
  double spacing_m = 0.0;      // translation sample spacing, <= resolution
};

struct CollisionReport {
  std::size_t sample_index;
  Pose sample;
};

using MoveResult = std::variant<MotionSegment, CollisionReport>;

// Samples the move from `pose` to `target` and checks a disc of `radius` at
// every sample. `target.theta_deg` must point from `pose` to `target`
// (std::invalid_argument otherwise) unless the positions coincide.
MoveResult ExecuteMove(const Pose& pose, const Pose& target,
                       const OccupancyGrid& grid, double radius,
                       const MotionLimits& limits = {});

bool MoveIsClear(const Pose& pose, const Pose& target,
                 const OccupancyGrid& grid, double radius);

struct RateEstimate {
  double v_mps = 0.0;
  double omega_dps = 0.0;
  // Set when the samples do not move (pure rotation). Speed is then zero and
  // the yaw rate comes from the heading difference of the outer samples.
  bool degenerate = false;
};

// Unicycle rates at the middle of three samples spaced `dt` seconds apart,
// from central differences: v = |p'| and omega = (x'y'' - y'x'') / |p'|^2.
RateEstimate UnicycleRates(const Pose& prev, const Pose& now, const Pose& next,
                           double dt);

struct Control {
  double v_mps;
  double omega_dps;
  double dt;
};

// Piecewise-constant controls recovered from the segment samples alone.
std::vector<Control> RecoverControls(const MotionSegment& segment);

// Forward-Euler integration of the unicycle model.
Pose IntegrateUnicycle(const Pose& start, std::span<const Control> controls);

}  // namespace gapnav

#endif  // GAPNAV_KINEMATICS_H_
