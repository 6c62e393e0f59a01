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

#include "gapnav/planner.h"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "gapnav/kinematics.h"

namespace gapnav {

WaypointLog::WaypointLog(double revisit_radius_m)
    : revisit_radius_(revisit_radius_m) {
  if (!(revisit_radius_m >= 0.0)) {
    throw std::invalid_argument("revisit radius must be non-negative");
  }
}

void WaypointLog::Append(const WaypointRecord& record) {
  if (!records_.empty() && record.index <= records_.back().index) {
    throw std::invalid_argument("waypoint indices must strictly increase");
  }
  records_.push_back(record);
}

bool IsRevisit(const WaypointLog& log, const Pose& candidate) {
  for (const WaypointRecord& record : log.records()) {
    if (Distance(record.pose.position(), candidate.position()) <=
        log.revisit_radius()) {
      return true;
    }
  }
  return false;
}

bool OrientationSimilar(double theta_a_deg, double theta_b_deg, double a_r) {
  if (!(a_r >= -1.0 && a_r <= 1.0)) {
    throw std::invalid_argument("a_r must lie in [-1, 1]");
  }
  // cos of the difference equals the dot product of the unit headings and is
  // exactly 1 for identical headings.
  return std::cos(DegToRad(WrapDegrees(theta_a_deg - theta_b_deg))) >= a_r;
}

Pose NextWaypoint(const Pose& pose, double heading_deg, double d_tilde) {
  if (!(d_tilde > 0.0)) throw std::invalid_argument("d_tilde must be positive");
  const Vec2 p = pose.position() + d_tilde * UnitVector(heading_deg);
  return {p.x, p.y, NormalizeDegrees(heading_deg)};
}

PlannerConfig PlannerConfig::ForRange(double lidar_range_m) {
  PlannerConfig config;
  config.lidar_range_m = lidar_range_m;
  config.d_tilde_m = 0.5 * lidar_range_m;
  config.DeriveDefaults();
  return config;
}

void PlannerConfig::DeriveDefaults() {
  revisit_radius_m = d_tilde_m / 2.0;
  obstacle_threshold_m = d_tilde_m + robot_radius_m;
}

void PlannerConfig::Validate() const {
  if (!(d_tilde_m > 0.0)) throw std::invalid_argument("d_tilde must be > 0");
  if (window < 1) throw std::invalid_argument("window L must be >= 1");
  if (!(robot_radius_m > 0.0)) throw std::invalid_argument("radius must be > 0");
  if (!(lidar_range_m > 0.0)) {
    throw std::invalid_argument("lidar range must be > 0");
  }
  if (!(a_r_cos >= -1.0 && a_r_cos <= 1.0)) {
    throw std::invalid_argument("a_r must lie in [-1, 1]");
  }
  if (max_waypoints <= 0) {
    throw std::invalid_argument("max waypoints must be > 0");
  }
  if (!(revisit_radius_m >= 0.0)) {
    throw std::invalid_argument("revisit radius must be >= 0");
  }
  if (!(obstacle_threshold_m >= 0.0)) {
    throw std::invalid_argument("obstacle threshold must be >= 0");
  }
}

PlannerState::PlannerState(const Pose& start, const PlannerConfig& config)
    : pose{start.x, start.y, NormalizeDegrees(start.theta_deg)},
      log(config.revisit_radius_m),
      region(config.window) {}

std::string_view ToString(DecisionKind kind) {
  switch (kind) {
    case DecisionKind::kAdvance: return "ADVANCE";
    case DecisionKind::kReverse: return "REVERSE";
    case DecisionKind::kHalt: return "HALT";
  }
  return "UNKNOWN";
}

Decision PlanStep(const PlannerState& state, const Scan& scan,
                  const OccupancyGrid& grid, const PlannerConfig& config) {
  Decision decision;
  decision.gaps = ExtractGaps(scan, config.gap_params());
  const double d = config.d_tilde_m;
  const double radius = config.robot_radius_m;

  // a_r = 1 switches the neighbouring-orientation rule off entirely.
  const bool orientation_rule = config.a_r_cos < 1.0;
  auto near_and_similar = [&](const Pose& visited, const Pose& candidate) {
    return Distance(visited.position(), candidate.position()) <=
               state.log.revisit_radius() &&
           OrientationSimilar(candidate.theta_deg, visited.theta_deg,
                              config.a_r_cos);
  };
  auto repeats_visit = [&](const Pose& candidate) {
    if (near_and_similar(state.pose, candidate)) return true;
    for (const WaypointRecord& record : state.log.records()) {
      if (near_and_similar(record.pose, candidate)) return true;
    }
    return false;
  };

  auto find_heading = [&](bool use_region,
                          bool use_rule) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < decision.gaps.size(); ++i) {
      const double heading = GapHeading(decision.gaps.gaps[i], scan.pose);
      if (use_region && !IntersectForward(state.region, heading, state.pose, d)) {
        continue;
      }
      const Pose candidate = NextWaypoint(state.pose, heading, d);
      if (!MoveIsClear(state.pose, candidate, grid, radius)) continue;
      if (use_rule && repeats_visit(candidate)) continue;
      return i;
    }
    return std::nullopt;
  };

  std::optional<std::size_t> chosen = find_heading(true, orientation_rule);
  if (!chosen && !state.region.empty()) {
    decision.region_cleared = true;
    chosen = find_heading(false, orientation_rule);
  }
  // Backtracking through sites already passed, the robot may reuse them
  // rather than turn around again. It takes the gap whose waypoint repeats
  // the fewest logged visits, the one left longest ago among equals, so a
  // loop of reused waypoints cannot persist.
  if (!chosen && orientation_rule && state.backtracking) {
    decision.region_cleared = true;
    decision.rule_waived = true;
    std::pair<std::size_t, std::int64_t> best;
    for (std::size_t i = 0; i < decision.gaps.size(); ++i) {
      const double heading = GapHeading(decision.gaps.gaps[i], scan.pose);
      const Pose candidate = NextWaypoint(state.pose, heading, d);
      if (!MoveIsClear(state.pose, candidate, grid, radius)) continue;
      std::pair<std::size_t, std::int64_t> usage{0, -1};
      for (const WaypointRecord& record : state.log.records()) {
        if (near_and_similar(record.pose, candidate)) {
          ++usage.first;
          usage.second = record.index;
        }
      }
      if (!chosen || usage < best) {
        chosen = i;
        best = usage;
      }
    }
  }
  if (chosen) {
    decision.kind = DecisionKind::kAdvance;
    decision.gap = chosen;
    decision.next = NextWaypoint(
        state.pose, GapHeading(decision.gaps.gaps[*chosen], scan.pose), d);
    decision.outcome = *chosen == 0 && !decision.region_cleared
                           ? StepOutcome::kAdvanced
                           : StepOutcome::kSkipped;
    return decision;
  }

  decision.region_cleared = true;
  const Pose reversed =
      NextWaypoint(state.pose, state.pose.theta_deg + 180.0, d);
  if (MoveIsClear(state.pose, reversed, grid, radius)) {
    decision.kind = DecisionKind::kReverse;
    decision.next = reversed;
    decision.outcome = StepOutcome::kReversed;
    return decision;
  }
  decision.kind = DecisionKind::kHalt;
  return decision;
}

void ApplyDecision(PlannerState& state, const Decision& decision) {
  if (decision.kind == DecisionKind::kHalt) return;
  if (decision.region_cleared) state.region.Clear();
  state.log.Append({state.pose, state.k, decision.outcome});
  // After a reversal the robot faces backwards at the old waypoint, so the
  // retained half-plane opens the other way.
  Pose facing = state.pose;
  if (decision.kind == DecisionKind::kReverse) {
    facing.theta_deg = NormalizeDegrees(facing.theta_deg + 180.0);
  }
  state.region.Push(HalfPlane::Forward(facing));
  state.backtracking =
      decision.kind == DecisionKind::kReverse || decision.rule_waived;
  state.pose = decision.next;
  ++state.k;
}

}  // namespace gapnav
