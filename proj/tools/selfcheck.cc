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

#include "selfcheck.h"

#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>

#include "gapnav/episode.h"
#include "gapnav/grid.h"
#include "gapnav/oracles.h"

namespace gapnav::cli {
namespace {

constexpr std::uint64_t kSeed = 20260101;

// A walled 20 x 20 m room with scattered boxes.
OccupancyGrid ClutteredRoom() {
  constexpr double kResolution = 0.1;
  OccupancyGrid grid = OccupancyGrid::Filled(200, 200, kResolution,
                                             CellState::kFree);
  for (int i = 0; i < 200; ++i) {
    for (int t = 0; t < 2; ++t) {
      grid.Set({i, t}, CellState::kOccupied);
      grid.Set({i, 199 - t}, CellState::kOccupied);
      grid.Set({t, i}, CellState::kOccupied);
      grid.Set({199 - t, i}, CellState::kOccupied);
    }
  }
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> corner(10, 180);
  std::uniform_int_distribution<int> side(2, 12);
  for (int box = 0; box < 25; ++box) {
    const int x0 = corner(rng), y0 = corner(rng);
    const int w = side(rng), h = side(rng);
    for (int y = y0; y < y0 + h; ++y) {
      for (int x = x0; x < x0 + w; ++x) grid.Set({x, y}, CellState::kOccupied);
    }
  }
  return grid;
}

CheckResult CheckRaycast() {
  CheckResult result{"raycast-vs-marching-oracle", true, ""};
  const OccupancyGrid grid = ClutteredRoom();
  const double tolerance = grid.resolution() * std::sqrt(2.0);
  const LidarConfig lidar{5.0, 1.0};
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_real_distribution<double> coord(0.3, 19.7);
  std::uniform_real_distribution<double> heading(0.0, 360.0);
  const double step = grid.resolution() / 10.0;
  int poses = 0, rays = 0, clipped = 0;
  while (poses < 200) {
    const Pose pose = MakePose(coord(rng), coord(rng), heading(rng));
    if (!grid.IsFree(grid.WorldToCell(pose.position()))) continue;
    ++poses;
    const Scan scan = AcquireScan(grid, pose, lidar).scan;
    for (const Ray& ray : scan.rays) {
      ++rays;
      const double expected = oracle::MarchRay(
          grid, pose.position(), pose.theta_deg + ray.bearing_deg,
          lidar.max_range_m, step);
      const bool both_clear = ray.clear() && expected == kClear;
      const bool both_hit = !ray.clear() && expected != kClear &&
                            std::abs(ray.range_m - expected) <= tolerance;
      // A hit just inside the range on one side and nothing on the other.
      const double hit = ray.clear() ? expected : ray.range_m;
      const bool grazing_limit = ray.clear() != (expected == kClear) &&
                                 hit >= lidar.max_range_m - tolerance;
      // The marcher stepped over a cell corner the raycast clipped.
      const bool agree = both_clear || both_hit || grazing_limit;
      const bool corner_clip =
          !agree && !ray.clear() && ray.range_m < expected &&
          oracle::HitNarrowerThanStep(grid, pose.position(),
                                      pose.theta_deg + ray.bearing_deg,
                                      ray.range_m, step);
      if (corner_clip) ++clipped;
      if (!agree && !corner_clip) {
        std::ostringstream detail;
        detail << "pose (" << pose.x << ", " << pose.y << ", "
               << pose.theta_deg << ") bearing " << ray.bearing_deg
               << ": raycast " << ray.range_m << ", oracle " << expected;
        result.passed = false;
        result.detail = detail.str();
        return result;
      }
    }
  }
  result.detail = std::to_string(rays) + " rays over " +
                  std::to_string(poses) + " poses, " +
                  std::to_string(clipped) + " corner clips";
  return result;
}

// Semicircular scan with random blocked clusters at random ranges.
Scan SyntheticScan(std::mt19937_64& rng) {
  Scan scan;
  scan.pose = MakePose(0.0, 0.0, 0.0);
  scan.max_range_m = 5.0;
  scan.angular_step_deg = 1.0;
  for (int b = -90; b <= 90; ++b) scan.rays.push_back({double(b), kClear});
  std::uniform_int_distribution<int> clusters(0, 4);
  std::uniform_int_distribution<int> start(0, 180);
  std::uniform_int_distribution<int> length(1, 40);
  std::uniform_real_distribution<double> range(0.4, 4.9);
  const int n = clusters(rng);
  for (int c = 0; c < n; ++c) {
    const int s = start(rng);
    const int e = std::min(180, s + length(rng));
    const double r = range(rng);
    for (int i = s; i <= e; ++i) scan.rays[i].range_m = r;
  }
  return scan;
}

CheckResult CheckGaps(const SelfcheckHooks& hooks) {
  CheckResult result{"gaps-vs-per-degree-oracle", true, ""};
  const auto find_gaps = hooks.find_gaps ? hooks.find_gaps : FindGapCandidates;
  const GapParams params{0.3, 2.5, 2.8, HeadingPolicy::kWidest};
  std::mt19937_64 rng(kSeed + 2);
  for (int trial = 0; trial < 500; ++trial) {
    const Scan scan = SyntheticScan(rng);
    const std::vector<Gap> gaps = find_gaps(scan, params);
    const std::vector<oracle::OracleGap> expected = oracle::PerDegreeGaps(
        scan, params.robot_radius_m, params.d_tilde_m,
        params.obstacle_threshold_m);
    bool same = gaps.size() == expected.size();
    for (std::size_t i = 0; same && i < gaps.size(); ++i) {
      same = gaps[i].lo_bearing_deg == expected[i].lo_bearing &&
             gaps[i].hi_bearing_deg == expected[i].hi_bearing &&
             gaps[i].clearance_ok == expected[i].clearance_ok;
    }
    if (!same) {
      result.passed = false;
      result.detail = "scan " + std::to_string(trial) + ": " +
                      std::to_string(gaps.size()) + " gaps, oracle " +
                      std::to_string(expected.size());
      return result;
    }
  }
  result.detail = "500 scans";
  return result;
}

CheckResult CheckStraightLine() {
  CheckResult result{"obstacle-free-straight-line", true, ""};
  const OccupancyGrid grid =
      OccupancyGrid::Filled(500, 500, 0.1, CellState::kFree);
  EpisodeConfig config;
  config.planner = PlannerConfig::ForRange(5.0);
  config.planner.max_waypoints = 20;
  config.start = MakePose(5.0, 25.0, 0.0);
  const EpisodeResult episode = SimulateEpisode(grid, config);
  // Only steps whose scan saw nothing closer than the threshold count; the
  // map edge ends the straight run.
  int checked = 0;
  for (const Pose& pose : episode.waypoints) {
    const Scan scan = AcquireScan(grid, pose, config.lidar()).scan;
    bool open = true;
    for (const Ray& ray : scan.rays) {
      open = open && ray.range_m > config.planner.obstacle_threshold_m;
    }
    if (!open) break;
    if (std::abs(pose.y - 25.0) > 1e-9 || pose.theta_deg != 0.0) {
      result.passed = false;
      result.detail = "waypoint " + std::to_string(checked) + " left the line";
      return result;
    }
    ++checked;
  }
  if (checked < 10) {
    result.passed = false;
    result.detail = "only " + std::to_string(checked) + " open waypoints";
    return result;
  }
  result.detail = std::to_string(checked) + " collinear waypoints";
  return result;
}

}  // namespace

std::vector<CheckResult> RunSelfchecks(const SelfcheckHooks& hooks) {
  return {CheckRaycast(), CheckGaps(hooks), CheckStraightLine()};
}

int ReportSelfchecks(const std::vector<CheckResult>& results,
                     std::ostream& out) {
  bool all_passed = true;
  for (const CheckResult& check : results) {
    out << (check.passed ? "PASS " : "FAIL ") << check.name;
    if (!check.detail.empty()) out << ": " << check.detail;
    out << '\n';
    all_passed = all_passed && check.passed;
  }
  return all_passed ? 0 : 3;
}

}  // namespace gapnav::cli
