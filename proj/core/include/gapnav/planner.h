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

#ifndef GAPNAV_PLANNER_H_
#define GAPNAV_PLANNER_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gapnav/geometry.h"
#include "gapnav/grid.h"
#include "gapnav/lidar.h"
#include "gapnav/safe_heading.h"

namespace gapnav {

enum class StepOutcome {
  kAdvanced,  // took the best-ranked gap
  kSkipped,   // advanced, but only after rejecting better-ranked gaps
  kReversed,
};

struct WaypointRecord {
  Pose pose;
  std::int64_t index = 0;
  StepOutcome outcome = StepOutcome::kAdvanced;
};

// Append-only memory of visited waypoints.
class WaypointLog {
 public:
  explicit WaypointLog(double revisit_radius_m);

  // Throws std::invalid_argument unless indices strictly increase.
  void Append(const WaypointRecord& record);

  const std::vector<WaypointRecord>& records() const { return records_; }
  double revisit_radius() const { return revisit_radius_; }

 private:
  double revisit_radius_;
  std::vector<WaypointRecord> records_;
};

// True iff some recorded waypoint lies within the revisit radius.
bool IsRevisit(const WaypointLog& log, const Pose& candidate);

// True when the two headings are too alike to re-traverse: the dot product of
// their unit vectors is at least `a_r`.
bool OrientationSimilar(double theta_a_deg, double theta_b_deg, double a_r);

// Waypoint `d_tilde` ahead along `heading_deg`, arriving with that heading.
Pose NextWaypoint(const Pose& pose, double heading_deg, double d_tilde);

struct PlannerConfig {
  double lidar_range_m = 5.0;
  double d_tilde_m = 2.5;
  double robot_radius_m = 0.3;
  double a_r_cos = 0.8660254037844387;  // cos 30 deg
  std::size_t window = 3;               // kUnboundedWindow keeps all history
  HeadingPolicy policy = HeadingPolicy::kWidest;
  std::int64_t max_waypoints = 400;
  double revisit_radius_m = 1.25;
  double obstacle_threshold_m = 2.8;

  // Defaults for a given sensor range: d_tilde = l / 2, revisit radius
  // d_tilde / 2, obstacle threshold d_tilde + r.
  static PlannerConfig ForRange(double lidar_range_m);

  // Recomputes the quantities derived from d_tilde and r.
  void DeriveDefaults();

  // Throws std::invalid_argument on an out-of-range field.
  void Validate() const;

  GapParams gap_params() const {
    return {robot_radius_m, d_tilde_m, obstacle_threshold_m, policy};
  }
};

struct PlannerState {
  PlannerState(const Pose& start, const PlannerConfig& config);

  Pose pose;
  std::int64_t k = 0;
  WaypointLog log;
  FeasibleRegion region;
  // Set by a reversal and kept until the robot again reaches a waypoint the
  // orientation rule accepts. While backtracking the rule may be waived.
  bool backtracking = false;
};

enum class DecisionKind { kAdvance, kReverse, kHalt };

std::string_view ToString(DecisionKind kind);

struct Decision {
  DecisionKind kind = DecisionKind::kHalt;
  Pose next;                          // undefined for kHalt
  std::optional<std::size_t> gap;     // index into `gaps` for kAdvance
  StepOutcome outcome = StepOutcome::kAdvanced;
  bool region_cleared = false;        // the half-plane window was reset
  bool rule_waived = false;           // accepted only with a_r = 1
  GapSet gaps;                        // gaps considered, best first
};

// One iteration of the exploration loop. Gaps are tried best first; a gap is
// taken when its waypoint lies in the retained half-planes, the straight move
// to it is collision-free, and it does not revisit a logged waypoint with a
// similar heading. Failing that the half-planes are dropped and the search
// repeats; failing again the robot turns around. While backtracking after a
// turn the orientation rule is waived as a last resort, and the robot takes
// the traversable gap whose neighbourhood it left longest ago. Halt means
// even the reversed move is blocked.
Decision PlanStep(const PlannerState& state, const Scan& scan,
                  const OccupancyGrid& grid, const PlannerConfig& config);

// Logs the current waypoint, updates the half-plane window and moves the
// state to the decided pose. No-op for kHalt.
void ApplyDecision(PlannerState& state, const Decision& decision);

}  // namespace gapnav

#endif  // GAPNAV_PLANNER_H_
