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

#ifndef GAPNAV_SAFE_HEADING_H_
#define GAPNAV_SAFE_HEADING_H_

#include <cstddef>
#include <deque>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gapnav/geometry.h"
#include "gapnav/lidar.h"

namespace gapnav {

// Closed half-plane {q : (q - anchor) . normal >= 0} ahead of a waypoint.
struct HalfPlane {
  Vec2 anchor;
  Vec2 normal;  // unit length

  static HalfPlane Forward(const Pose& pose);
  bool Contains(Vec2 q) const;
};

inline constexpr std::size_t kUnboundedWindow =
    std::numeric_limits<std::size_t>::max();

// Intersection of the most recent `window` half-planes.
class FeasibleRegion {
 public:
  explicit FeasibleRegion(std::size_t window = 3);

  // Appends a plane, evicting the oldest once the window is full.
  void Push(const HalfPlane& plane);
  void Clear() { planes_.clear(); }

  // Conjunction over retained planes; an empty region accepts everything.
  bool Contains(Vec2 q) const;

  bool empty() const { return planes_.empty(); }
  std::size_t size() const { return planes_.size(); }
  std::size_t window() const { return window_; }
  const std::deque<HalfPlane>& planes() const { return planes_; }

 private:
  std::size_t window_;
  std::deque<HalfPlane> planes_;
};

// A contiguous run of safe bearings. World-frame bounds keep `lo` in
// [0, 360) and `hi = lo + width`, so `hi` may exceed 360.
struct Gap {
  double lo_deg = 0.0;
  double hi_deg = 0.0;
  double width_deg = 0.0;
  double lo_bearing_deg = 0.0;  // same bounds relative to the scan heading
  double hi_bearing_deg = 0.0;
  bool clearance_ok = false;

  double bisector_bearing_deg() const {
    return 0.5 * (lo_bearing_deg + hi_bearing_deg);
  }
};

enum class HeadingPolicy { kWidest, kPaperMin, kFirstSafe };

std::string_view ToString(HeadingPolicy policy);
std::optional<HeadingPolicy> ParseHeadingPolicy(std::string_view text);

struct GapParams {
  double robot_radius_m = 0.3;
  double d_tilde_m = 2.5;
  double obstacle_threshold_m = 2.8;
  HeadingPolicy policy = HeadingPolicy::kWidest;
};

// Gaps ordered best first under a policy; only gaps that admit the robot.
struct GapSet {
  std::vector<Gap> gaps;
  Pose pose;  // scan pose the gaps were taken from

  std::size_t size() const { return gaps.size(); }
  bool empty() const { return gaps.empty(); }
};

// Every run of two or more consecutive safe rays, in bearing order, with
// clearance evaluated but not filtered. A ray is safe when it is clear or its
// range exceeds the obstacle threshold.
std::vector<Gap> FindGapCandidates(const Scan& scan, const GapParams& params);

// The clearance-admissible candidates sorted by `params.policy`.
GapSet ExtractGaps(const Scan& scan, const GapParams& params);

// Sorts by policy. `widest` and `paper-min` break width ties by the least
// turning away from the scan heading, then by the lower bearing of `lo`.
// `first-safe` keeps sweep order (ascending bearing).
void OrderGaps(std::vector<Gap>& gaps, HeadingPolicy policy);

// World heading of the gap's bisector, computed in the scan frame so that a
// full semicircle reproduces the scan heading exactly.
double GapHeading(const Gap& gap, const Pose& scan_pose);

struct HeadingChoice {
  std::size_t index;
  double heading_deg;
};

// Picks a gap by policy among clearance-admissible gaps and returns its
// bisector. nullopt when none admits the robot.
std::optional<HeadingChoice> SelectHeading(const GapSet& gaps,
                                           HeadingPolicy policy);

// True iff the waypoint `d_tilde` ahead of `pose` along `candidate_heading_deg`
// lies in every plane of `region`.
bool IntersectForward(const FeasibleRegion& region,
                      double candidate_heading_deg, const Pose& pose,
                      double d_tilde);

// Rows of "lo,hi,width,clearance_ok".
void WriteGapCsv(std::span<const Gap> gaps, std::ostream& out);

}  // namespace gapnav

#endif  // GAPNAV_SAFE_HEADING_H_
