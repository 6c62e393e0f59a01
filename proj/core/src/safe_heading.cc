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

#include "gapnav/safe_heading.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "format.h"

namespace gapnav {
namespace {

constexpr double kHalfPlaneTolerance = 1e-9;

bool IsSafe(const Ray& ray, double threshold) {
  return ray.clear() || ray.range_m > threshold;
}

Gap MakeGap(const Scan& scan, const Ray& first, const Ray& last,
            const GapParams& params) {
  Gap gap;
  gap.lo_bearing_deg = first.bearing_deg;
  gap.hi_bearing_deg = last.bearing_deg;
  gap.width_deg = last.bearing_deg - first.bearing_deg;
  gap.lo_deg = NormalizeDegrees(scan.pose.theta_deg + first.bearing_deg);
  gap.hi_deg = gap.lo_deg + gap.width_deg;
  const double chord =
      2.0 * params.d_tilde_m * std::sin(DegToRad(gap.width_deg / 2.0));
  gap.clearance_ok =
      chord >= 2.0 * params.robot_radius_m || first.clear() || last.clear();
  return gap;
}

// Turning needed to follow the bisector, measured from the scan heading.
double Turning(const Gap& gap) { return std::abs(gap.bisector_bearing_deg()); }

// Strict weak order on (primary, turning, lo bearing).
template <typename WidthLess>
bool RankBefore(const Gap& a, const Gap& b, WidthLess width_before) {
  if (width_before(a.width_deg, b.width_deg)) return true;
  if (width_before(b.width_deg, a.width_deg)) return false;
  if (Turning(a) != Turning(b)) return Turning(a) < Turning(b);
  return a.lo_bearing_deg < b.lo_bearing_deg;
}

bool WiderFirst(const Gap& a, const Gap& b) {
  return RankBefore(a, b, [](double x, double y) { return x > y; });
}
bool NarrowerFirst(const Gap& a, const Gap& b) {
  return RankBefore(a, b, [](double x, double y) { return x < y; });
}

}  // namespace

HalfPlane HalfPlane::Forward(const Pose& pose) {
  return {pose.position(), UnitVector(pose.theta_deg)};
}

bool HalfPlane::Contains(Vec2 q) const {
  return Dot(q - anchor, normal) >= -kHalfPlaneTolerance;
}

FeasibleRegion::FeasibleRegion(std::size_t window) : window_(window) {
  if (window == 0) throw std::invalid_argument("window must be at least 1");
}

void FeasibleRegion::Push(const HalfPlane& plane) {
  planes_.push_back(plane);
  while (planes_.size() > window_) planes_.pop_front();
}

bool FeasibleRegion::Contains(Vec2 q) const {
  return std::all_of(planes_.begin(), planes_.end(),
                     [q](const HalfPlane& plane) { return plane.Contains(q); });
}

std::string_view ToString(HeadingPolicy policy) {
  switch (policy) {
    case HeadingPolicy::kWidest: return "widest";
    case HeadingPolicy::kPaperMin: return "paper-min";
    case HeadingPolicy::kFirstSafe: return "first-safe";
  }
  return "unknown";
}

std::optional<HeadingPolicy> ParseHeadingPolicy(std::string_view text) {
  if (text == "widest") return HeadingPolicy::kWidest;
  if (text == "paper-min") return HeadingPolicy::kPaperMin;
  if (text == "first-safe") return HeadingPolicy::kFirstSafe;
  return std::nullopt;
}

std::vector<Gap> FindGapCandidates(const Scan& scan, const GapParams& params) {
  if (!(params.robot_radius_m > 0.0) || !(params.d_tilde_m > 0.0)) {
    throw std::invalid_argument("radius and d_tilde must be positive");
  }
  std::vector<Gap> gaps;
  const auto& rays = scan.rays;
  std::size_t i = 0;
  while (i < rays.size()) {
    if (!IsSafe(rays[i], params.obstacle_threshold_m)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < rays.size() &&
           IsSafe(rays[j + 1], params.obstacle_threshold_m)) {
      ++j;
    }
    // A lone safe ray has no angular width.
    if (j > i) gaps.push_back(MakeGap(scan, rays[i], rays[j], params));
    i = j + 1;
  }
  return gaps;
}

void OrderGaps(std::vector<Gap>& gaps, HeadingPolicy policy) {
  switch (policy) {
    case HeadingPolicy::kWidest:
      std::stable_sort(gaps.begin(), gaps.end(), WiderFirst);
      break;
    case HeadingPolicy::kPaperMin:
      std::stable_sort(gaps.begin(), gaps.end(), NarrowerFirst);
      break;
    case HeadingPolicy::kFirstSafe:
      std::stable_sort(gaps.begin(), gaps.end(),
                       [](const Gap& a, const Gap& b) {
                         return a.lo_bearing_deg < b.lo_bearing_deg;
                       });
      break;
  }
}

GapSet ExtractGaps(const Scan& scan, const GapParams& params) {
  GapSet set;
  set.pose = scan.pose;
  for (Gap& gap : FindGapCandidates(scan, params)) {
    if (gap.clearance_ok) set.gaps.push_back(gap);
  }
  OrderGaps(set.gaps, params.policy);
  return set;
}

double GapHeading(const Gap& gap, const Pose& scan_pose) {
  return NormalizeDegrees(scan_pose.theta_deg + gap.bisector_bearing_deg());
}

std::optional<HeadingChoice> SelectHeading(const GapSet& gaps,
                                           HeadingPolicy policy) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const Gap& gap = gaps.gaps[i];
    if (!gap.clearance_ok) continue;
    if (!best) {
      best = i;
      if (policy == HeadingPolicy::kFirstSafe) break;
      continue;
    }
    const Gap& incumbent = gaps.gaps[*best];
    const bool better = policy == HeadingPolicy::kWidest
                            ? WiderFirst(gap, incumbent)
                            : NarrowerFirst(gap, incumbent);
    if (better) best = i;
  }
  if (!best) return std::nullopt;
  return HeadingChoice{*best, GapHeading(gaps.gaps[*best], gaps.pose)};
}

bool IntersectForward(const FeasibleRegion& region,
                      double candidate_heading_deg, const Pose& pose,
                      double d_tilde) {
  const Vec2 candidate =
      pose.position() + d_tilde * UnitVector(candidate_heading_deg);
  return region.Contains(candidate);
}

void WriteGapCsv(std::span<const Gap> gaps, std::ostream& out) {
  using internal::FormatDouble;
  out << "lo,hi,width,clearance_ok\n";
  for (const Gap& gap : gaps) {
    out << FormatDouble(gap.lo_deg) << ',' << FormatDouble(gap.hi_deg) << ','
        << FormatDouble(gap.width_deg) << ','
        << (gap.clearance_ok ? "true" : "false") << '\n';
  }
}

}  // namespace gapnav
