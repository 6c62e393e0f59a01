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

#include "gapnav/kinematics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gapnav {
namespace {

constexpr double kBearingToleranceDeg = 1e-6;
constexpr double kMinMoveLength = 1e-12;

}  // namespace

MoveResult ExecuteMove(const Pose& pose, const Pose& target,
                       const OccupancyGrid& grid, double radius,
                       const MotionLimits& limits) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  if (!(limits.linear_speed_mps > 0.0) || !(limits.angular_speed_dps > 0.0)) {
    throw std::invalid_argument("motion limits must be positive");
  }
  const Vec2 delta = target.position() - pose.position();
  const double length = Norm(delta);
  const double end_theta = NormalizeDegrees(target.theta_deg);
  if (length > kMinMoveLength) {
    const double bearing = RadToDeg(std::atan2(delta.y, delta.x));
    if (AngularDistanceDegrees(bearing, end_theta) > kBearingToleranceDeg) {
      throw std::invalid_argument(
          "target heading does not point along the move");
    }
  }

  MotionSegment segment;
  segment.start = {pose.x, pose.y, NormalizeDegrees(pose.theta_deg)};
  segment.end = {target.x, target.y, end_theta};
  segment.rotation_deg = WrapDegrees(end_theta - segment.start.theta_deg);
  segment.length_m = length > kMinMoveLength ? length : 0.0;

  segment.samples.push_back(segment.start);
  segment.times.push_back(0.0);
  double t = 0.0;
  if (segment.rotation_deg != 0.0) {
    t = std::abs(segment.rotation_deg) / limits.angular_speed_dps;
    segment.omega_dps =
        std::copysign(limits.angular_speed_dps, segment.rotation_deg);
    segment.samples.push_back({pose.x, pose.y, end_theta});
    segment.times.push_back(t);
  }
  if (segment.length_m > 0.0) {
    const int intervals = std::max(
        1, static_cast<int>(std::ceil(segment.length_m / grid.resolution())));
    segment.spacing_m = segment.length_m / intervals;
    segment.v_mps = limits.linear_speed_mps;
    const double dt = segment.spacing_m / limits.linear_speed_mps;
    for (int i = 1; i <= intervals; ++i) {
      const Vec2 p = i == intervals
                         ? target.position()
                         : pose.position() + (static_cast<double>(i) / intervals) * delta;
      segment.samples.push_back({p.x, p.y, end_theta});
      segment.times.push_back(t + i * dt);
    }
  }

  for (std::size_t i = 0; i < segment.samples.size(); ++i) {
    if (!IsTraversable(grid, segment.samples[i].position(), radius)) {
      return CollisionReport{i, segment.samples[i]};
    }
  }
  return segment;
}

bool MoveIsClear(const Pose& pose, const Pose& target,
                 const OccupancyGrid& grid, double radius) {
  return std::holds_alternative<MotionSegment>(
      ExecuteMove(pose, target, grid, radius));
}

RateEstimate UnicycleRates(const Pose& prev, const Pose& now, const Pose& next,
                           double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const double xd = (next.x - prev.x) / (2.0 * dt);
  const double yd = (next.y - prev.y) / (2.0 * dt);
  const double xdd = (next.x - 2.0 * now.x + prev.x) / (dt * dt);
  const double ydd = (next.y - 2.0 * now.y + prev.y) / (dt * dt);
  const double speed_sq = xd * xd + yd * yd;
  RateEstimate rates;
  if (speed_sq == 0.0) {
    rates.degenerate = true;
    rates.omega_dps = WrapDegrees(next.theta_deg - prev.theta_deg) / (2.0 * dt);
    return rates;
  }
  rates.v_mps = std::sqrt(speed_sq);
  rates.omega_dps = RadToDeg((xd * ydd - yd * xdd) / speed_sq);
  return rates;
}

std::vector<Control> RecoverControls(const MotionSegment& segment) {
  const auto& s = segment.samples;
  std::vector<Control> controls;
  if (s.size() < 2) return controls;
  // First sample of the translation run: the last one at the start position.
  std::size_t run_begin = 0;
  while (run_begin + 1 < s.size() &&
         s[run_begin + 1].position() == s[run_begin].position()) {
    ++run_begin;
  }
  const std::size_t run_end = s.size() - 1;

  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double dt = segment.times[i + 1] - segment.times[i];
    if (i < run_begin) {
      const Pose mid{s[i].x, s[i].y,
                     s[i].theta_deg +
                         WrapDegrees(s[i + 1].theta_deg - s[i].theta_deg) / 2.0};
      const RateEstimate rates = UnicycleRates(s[i], mid, s[i + 1], dt / 2.0);
      controls.push_back({rates.v_mps, rates.omega_dps, dt});
      continue;
    }
    if (run_end - run_begin < 2) {
      controls.push_back({Distance(s[i].position(), s[i + 1].position()) / dt,
                          0.0, dt});
      continue;
    }
    const std::size_t center = std::clamp(i, run_begin + 1, run_end - 1);
    const RateEstimate rates =
        UnicycleRates(s[center - 1], s[center], s[center + 1], dt);
    controls.push_back({rates.v_mps, rates.omega_dps, dt});
  }
  return controls;
}

Pose IntegrateUnicycle(const Pose& start, std::span<const Control> controls) {
  double x = start.x;
  double y = start.y;
  double theta = start.theta_deg;
  for (const Control& u : controls) {
    const double rad = DegToRad(theta);
    x += u.v_mps * std::cos(rad) * u.dt;
    y += u.v_mps * std::sin(rad) * u.dt;
    theta += u.omega_dps * u.dt;
  }
  return {x, y, NormalizeDegrees(theta)};
}

}  // namespace gapnav
