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

#include "gapnav/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace gapnav::oracle {
namespace {

// Cell lookup without going through the grid's coordinate helpers.
bool PointBlocked(const OccupancyGrid& grid, Vec2 p) {
  const double fx = (p.x - grid.origin().x) / grid.resolution();
  const double fy = (p.y - grid.origin().y) / grid.resolution();
  if (fx < 0.0 || fy < 0.0 || fx >= grid.width() || fy >= grid.height()) {
    return true;
  }
  const auto cells = grid.cells();
  const std::size_t index = static_cast<std::size_t>(fy) * grid.width() +
                            static_cast<std::size_t>(fx);
  return cells[index] != CellState::kFree;
}

Box BoxOf(const OccupancyGrid& grid, int x, int y) {
  const double res = grid.resolution();
  const Vec2 o = grid.origin();
  return {{o.x + x * res, o.y + y * res}, {o.x + (x + 1) * res, o.y + (y + 1) * res}};
}

}  // namespace

double MarchRay(const OccupancyGrid& grid, Vec2 origin, double direction_deg,
                double limit, double step) {
  const double rad = direction_deg * std::numbers::pi / 180.0;
  const Vec2 dir{std::cos(rad), std::sin(rad)};
  for (long i = 0;; ++i) {
    const double t = static_cast<double>(i) * step;
    if (t > limit) return kClear;
    if (PointBlocked(grid, {origin.x + t * dir.x, origin.y + t * dir.y})) {
      return t;
    }
  }
}

double ChordThroughCell(const OccupancyGrid& grid, Vec2 origin,
                        double direction_deg, CellIndex cell) {
  const double rad = direction_deg * std::numbers::pi / 180.0;
  const double dir[2] = {std::cos(rad), std::sin(rad)};
  const double from[2] = {origin.x, origin.y};
  const Box box = grid.CellBounds(cell);
  const double lo[2] = {box.min.x, box.min.y};
  const double hi[2] = {box.max.x, box.max.y};
  double enter = 0.0;
  double leave = std::numeric_limits<double>::infinity();
  for (int axis = 0; axis < 2; ++axis) {
    if (dir[axis] == 0.0) {
      if (from[axis] < lo[axis] || from[axis] > hi[axis]) return 0.0;
      continue;
    }
    double t0 = (lo[axis] - from[axis]) / dir[axis];
    double t1 = (hi[axis] - from[axis]) / dir[axis];
    if (t0 > t1) std::swap(t0, t1);
    enter = std::max(enter, t0);
    leave = std::min(leave, t1);
  }
  return std::max(0.0, leave - enter);
}

bool HitNarrowerThanStep(const OccupancyGrid& grid, Vec2 origin,
                         double direction_deg, double hit_range, double step) {
  const double rad = direction_deg * std::numbers::pi / 180.0;
  const Vec2 p{origin.x + hit_range * std::cos(rad),
               origin.y + hit_range * std::sin(rad)};
  const double slack = 1e-9;
  bool any_blocked = false;
  for (const double dx : {-slack, slack}) {
    for (const double dy : {-slack, slack}) {
      const CellIndex cell = grid.WorldToCell({p.x + dx, p.y + dy});
      if (grid.IsFree(cell)) continue;
      any_blocked = true;
      if (ChordThroughCell(grid, origin, direction_deg, cell) >= step) {
        return false;
      }
    }
  }
  return any_blocked;
}

bool DiscIsFree(const OccupancyGrid& grid, Vec2 p, double radius) {
  const Box bounds = grid.Bounds();
  if (p.x - radius <= bounds.min.x || p.x + radius >= bounds.max.x ||
      p.y - radius <= bounds.min.y || p.y + radius >= bounds.max.y) {
    return false;
  }
  const auto cells = grid.cells();
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      if (cells[static_cast<std::size_t>(y) * grid.width() + x] ==
          CellState::kFree) {
        continue;
      }
      if (DistanceToBox(p, BoxOf(grid, x, y)) <= radius) return false;
    }
  }
  return true;
}

double DistanceToNearestOccupied(const OccupancyGrid& grid, Vec2 p) {
  double best = kClear;
  const auto cells = grid.cells();
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      if (cells[static_cast<std::size_t>(y) * grid.width() + x] !=
          CellState::kOccupied) {
        continue;
      }
      best = std::min(best, DistanceToBox(p, BoxOf(grid, x, y)));
    }
  }
  return best;
}

std::vector<OracleGap> PerDegreeGaps(const Scan& scan, double radius,
                                     double d_tilde, double threshold) {
  if (scan.rays.size() != 181) {
    throw std::invalid_argument("per-degree oracle needs a 1 degree scan");
  }
  // label[b + 90] for bearing b in [-90, 90]; padded with unsafe sentinels.
  std::vector<int> label(183, 0);
  std::vector<bool> clear(181, false);
  for (int b = -90; b <= 90; ++b) {
    const Ray& ray = scan.rays[b + 90];
    if (std::lround(ray.bearing_deg) != b) {
      throw std::invalid_argument("scan bearings are not whole degrees");
    }
    clear[b + 90] = std::isinf(ray.range_m);
    label[b + 91] = clear[b + 90] || ray.range_m > threshold ? 1 : 0;
  }
  std::vector<OracleGap> gaps;
  int run_start = 0;
  for (int i = 1; i < 183; ++i) {
    if (label[i] == 1 && label[i - 1] == 0) run_start = i;
    if (label[i] == 0 && label[i - 1] == 1) {
      const int lo = run_start - 91;
      const int hi = i - 1 - 91;
      if (hi == lo) continue;
      const double half = (hi - lo) * std::numbers::pi / 360.0;
      const bool fits = 2.0 * d_tilde * std::sin(half) >= 2.0 * radius;
      gaps.push_back({lo, hi, fits || clear[lo + 90] || clear[hi + 90]});
    }
  }
  return gaps;
}

}  // namespace gapnav::oracle
