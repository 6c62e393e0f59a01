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

#include "gapnav/lidar.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "format.h"

namespace gapnav {

int RayCountForStep(double angular_step_deg) {
  if (!(angular_step_deg > 0.0) || angular_step_deg > 180.0) {
    throw std::invalid_argument("angular step must be in (0, 180]");
  }
  const double intervals = 180.0 / angular_step_deg;
  const double rounded = std::round(intervals);
  if (std::abs(intervals - rounded) > 1e-9) {
    throw std::invalid_argument("angular step must divide 180 evenly");
  }
  return static_cast<int>(rounded) + 1;
}

double CastRay(const OccupancyGrid& grid, Vec2 origin, double direction_deg,
               double max_range, std::vector<CellIndex>* visited) {
  const Vec2 dir = UnitVector(direction_deg);
  const double res = grid.resolution();
  const Vec2 grid_origin = grid.origin();
  const int step_x = dir.x > 0.0 ? 1 : (dir.x < 0.0 ? -1 : 0);
  const int step_y = dir.y > 0.0 ? 1 : (dir.y < 0.0 ? -1 : 0);

  auto enter = [&](CellIndex cell) {
    if (visited != nullptr && grid.Contains(cell)) visited->push_back(cell);
    return !grid.IsFree(cell);
  };
  // Ray parameter (meters) at which the ray leaves `cell` through its next
  // vertical or horizontal edge. Recomputed from the index each step.
  auto exit_x = [&](int cx) {
    if (step_x == 0) return kClear;
    const double edge = grid_origin.x + (step_x > 0 ? cx + 1 : cx) * res;
    return (edge - origin.x) / dir.x;
  };
  auto exit_y = [&](int cy) {
    if (step_y == 0) return kClear;
    const double edge = grid_origin.y + (step_y > 0 ? cy + 1 : cy) * res;
    return (edge - origin.y) / dir.y;
  };

  CellIndex cell = grid.WorldToCell(origin);
  if (enter(cell)) return 0.0;
  while (true) {
    const double tx = exit_x(cell.x);
    const double ty = exit_y(cell.y);
    const double t = std::min(tx, ty);
    if (t > max_range) return kClear;
    if (tx < ty) {
      cell.x += step_x;
      if (enter(cell)) return t;
    } else if (ty < tx) {
      cell.y += step_y;
      if (enter(cell)) return t;
    } else {
      // Exactly through a corner: the ray touches both side cells.
      const bool side_x = enter({cell.x + step_x, cell.y});
      const bool side_y = enter({cell.x, cell.y + step_y});
      cell = {cell.x + step_x, cell.y + step_y};
      const bool diagonal = enter(cell);
      if (side_x || side_y || diagonal) return t;
    }
  }
}

namespace {

void CheckPose(const OccupancyGrid& grid, const Pose& pose) {
  const Box bounds = grid.Bounds();
  const Vec2 p = pose.position();
  if (!(p.x > bounds.min.x && p.x < bounds.max.x && p.y > bounds.min.y &&
        p.y < bounds.max.y)) {
    throw PoseOutOfBounds("pose (" + internal::FormatDouble(p.x) + ", " +
                          internal::FormatDouble(p.y) + ") is outside the map");
  }
  const CellIndex center = grid.WorldToCell(p);
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      const CellIndex cell{center.x + dx, center.y + dy};
      if (DistanceToBox(p, grid.CellBounds(cell)) == 0.0 && !grid.IsFree(cell)) {
        throw PoseInsideObstacle("pose (" + internal::FormatDouble(p.x) + ", " +
                                 internal::FormatDouble(p.y) +
                                 ") touches a non-Free cell");
      }
    }
  }
}

}  // namespace

ScanResult AcquireScan(const OccupancyGrid& grid, const Pose& pose,
                       const LidarConfig& config) {
  if (!(config.max_range_m > 0.0)) {
    throw std::invalid_argument("max range must be positive");
  }
  const int count = RayCountForStep(config.angular_step_deg);
  CheckPose(grid, pose);

  ScanResult result;
  Scan& scan = result.scan;
  scan.pose = {pose.x, pose.y, NormalizeDegrees(pose.theta_deg)};
  scan.max_range_m = config.max_range_m;
  scan.angular_step_deg = config.angular_step_deg;
  scan.rays.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double bearing =
        i + 1 == count ? 90.0 : -90.0 + i * config.angular_step_deg;
    const double range =
        CastRay(grid, pose.position(), scan.pose.theta_deg + bearing,
                config.max_range_m, &result.footprint);
    scan.rays.push_back({bearing, range});
  }
  return result;
}

Scan AddRangeNoise(const Scan& scan, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
  Scan noisy = scan;
  if (sigma == 0.0) return noisy;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  constexpr int kMaxDraws = 64;
  for (Ray& ray : noisy.rays) {
    if (ray.clear()) continue;
    double perturbed = ray.range_m;
    int draws = 0;
    do {
      perturbed = ray.range_m + noise(rng);
    } while ((perturbed <= 0.0 || perturbed > scan.max_range_m) &&
             ++draws < kMaxDraws);
    // Only reachable for sigma far beyond the sensor range.
    ray.range_m = std::clamp(perturbed, 1e-9, scan.max_range_m);
  }
  return noisy;
}

void WriteScanCsv(const Scan& scan, std::ostream& out) {
  using internal::FormatDouble;
  out << "# pose=" << FormatDouble(scan.pose.x) << ','
      << FormatDouble(scan.pose.y) << ',' << FormatDouble(scan.pose.theta_deg)
      << " max_range=" << FormatDouble(scan.max_range_m) << '\n';
  for (const Ray& ray : scan.rays) {
    out << FormatDouble(ray.bearing_deg) << ',' << FormatDouble(ray.range_m)
        << '\n';
  }
}

}  // namespace gapnav
