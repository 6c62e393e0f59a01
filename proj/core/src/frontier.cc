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

#include "gapnav/frontier.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <variant>

#include "gapnav/kinematics.h"

namespace gapnav {
namespace {

constexpr CellIndex kFourNeighbours[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
constexpr CellIndex kEightNeighbours[] = {{1, 0},  {0, 1},  {-1, 0}, {0, -1},
                                          {1, 1},  {-1, 1}, {-1, -1}, {1, -1}};

// Unseen cells are approached until they are at most this far away.
constexpr double kObserveRadiusM = 1.5;

double Bearing(Vec2 from, Vec2 to) {
  return NormalizeDegrees(RadToDeg(std::atan2(to.y - from.y, to.x - from.x)));
}

}  // namespace

std::vector<std::uint8_t> ConfigurationSpace(const OccupancyGrid& grid,
                                             double radius) {
  std::vector<std::uint8_t> cspace(grid.cell_count(), 0);
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    const CellIndex cell = grid.FromIndex(i);
    if (grid.At(cell) == CellState::kFree &&
        IsTraversable(grid, grid.CellCenter(cell), radius)) {
      cspace[i] = 1;
    }
  }
  return cspace;
}

bool IsFrontier(const OccupancyGrid& grid, const CoverageLedger& ledger,
                CellIndex cell) {
  if (!grid.Contains(cell) || grid.At(cell) != CellState::kFree ||
      !ledger.IsSeen(grid.Index(cell))) {
    return false;
  }
  for (const CellIndex& step : kFourNeighbours) {
    const CellIndex next{cell.x + step.x, cell.y + step.y};
    if (grid.Contains(next) && !ledger.IsSeen(grid.Index(next))) return true;
  }
  return false;
}

bool LineOfSight(const OccupancyGrid& grid, CellIndex from, CellIndex to) {
  const Vec2 a = grid.CellCenter(from);
  const Vec2 b = grid.CellCenter(to);
  const double step = grid.resolution() / 4.0;
  const int n = static_cast<int>(std::ceil(Distance(a, b) / step));
  for (int i = 0; i <= n; ++i) {
    const double t = n == 0 ? 0.0 : static_cast<double>(i) / n;
    const CellIndex cell = grid.WorldToCell({a.x + t * (b.x - a.x),
                                             a.y + t * (b.y - a.y)});
    if (grid.StateOrOccupied(cell) != CellState::kFree) return false;
  }
  return true;
}

std::optional<FrontierGoal> NearestObservationPoint(
    const OccupancyGrid& grid, const std::vector<std::uint8_t>& cspace,
    const CoverageLedger& ledger, const std::vector<std::uint8_t>& exhausted,
    CellIndex from, double observe_radius_m) {
  if (!grid.Contains(from)) return std::nullopt;
  auto is_target = [&](CellIndex c) {
    if (!grid.Contains(c) || grid.At(c) != CellState::kFree) return false;
    const std::size_t index = grid.Index(c);
    if (ledger.IsSeen(index) || exhausted[index]) return false;
    for (const CellIndex& step : kFourNeighbours) {
      const CellIndex next{c.x + step.x, c.y + step.y};
      if (IsFrontier(grid, ledger, next)) return true;
    }
    return false;
  };
  bool any_target = false;
  for (std::size_t i = 0; i < grid.cell_count() && !any_target; ++i) {
    any_target = is_target(grid.FromIndex(i));
  }
  if (!any_target) return std::nullopt;

  const int reach = static_cast<int>(observe_radius_m / grid.resolution());
  auto observable_target = [&](CellIndex c) -> std::optional<CellIndex> {
    for (int dy = -reach; dy <= reach; ++dy) {
      for (int dx = -reach; dx <= reach; ++dx) {
        if (dx * dx + dy * dy > reach * reach) continue;
        const CellIndex t{c.x + dx, c.y + dy};
        if (is_target(t) && LineOfSight(grid, c, t)) return t;
      }
    }
    return std::nullopt;
  };

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(grid.cell_count(), kNone);
  std::queue<CellIndex> queue;
  const std::size_t origin = grid.Index(from);
  parent[origin] = origin;
  queue.push(from);
  auto passable = [&](CellIndex c) {
    return grid.Contains(c) && cspace[grid.Index(c)] != 0;
  };
  while (!queue.empty()) {
    const CellIndex cell = queue.front();
    queue.pop();
    const std::size_t index = grid.Index(cell);
    if (passable(cell)) {
      if (const auto target = observable_target(cell)) {
        FrontierGoal goal{{}, *target};
        for (std::size_t i = index;; i = parent[i]) {
          goal.path.push_back(grid.FromIndex(i));
          if (i == origin) break;
        }
        std::reverse(goal.path.begin(), goal.path.end());
        return goal;
      }
    }
    for (const CellIndex& step : kEightNeighbours) {
      const CellIndex next{cell.x + step.x, cell.y + step.y};
      if (!passable(next) || parent[grid.Index(next)] != kNone) continue;
      // No corner cutting on diagonals.
      if (step.x != 0 && step.y != 0 &&
          (!passable({cell.x + step.x, cell.y}) ||
           !passable({cell.x, cell.y + step.y}))) {
        continue;
      }
      parent[grid.Index(next)] = index;
      queue.push(next);
    }
  }
  return std::nullopt;
}

EpisodeResult SimulateFrontierEpisode(const OccupancyGrid& grid,
                                      const EpisodeConfig& config,
                                      std::stop_token stop) {
  const PlannerConfig& planner = config.planner;
  planner.Validate();
  const double radius = planner.robot_radius_m;
  Pose pose = MakePose(config.start.x, config.start.y, config.start.theta_deg);
  {
    const Box bounds = grid.Bounds();
    if (!(pose.x > bounds.min.x && pose.x < bounds.max.x &&
          pose.y > bounds.min.y && pose.y < bounds.max.y)) {
      throw PoseOutOfBounds("start pose is outside the map");
    }
    if (!IsTraversable(grid, pose.position(), radius)) {
      throw EpisodeError("start pose is not traversable");
    }
  }
  const auto clock_start = std::chrono::steady_clock::now();
  const CoverageMeter meter(grid, grid.WorldToCell(pose.position()));
  const std::vector<std::uint8_t> cspace = ConfigurationSpace(grid, radius);
  std::vector<std::uint8_t> exhausted(grid.cell_count(), 0);
  const LidarConfig lidar = config.lidar();

  EpisodeResult result;
  result.ledger = CoverageLedger(grid.cell_count());
  EpisodeReport& report = result.report;
  report.strategy = Strategy::kFrontier;

  std::vector<CellIndex> pending;   // remaining cells of the current path
  std::optional<CellIndex> target;  // unseen cell to face at the goal
  for (std::int64_t k = 0;; ++k) {
    result.ledger.MarkSeen(grid, AcquireScan(grid, pose, lidar).footprint);
    report.coverage_series.push_back(meter.Fraction(result.ledger));
    result.waypoints.push_back(pose);

    auto halt = [&](HaltReason reason) {
      report.halt_reason = reason;
      result.trace.push_back({k, pose, TraceKind::kHalt});
    };
    if (stop.stop_requested()) {
      halt(HaltReason::kUserStop);
      break;
    }
    if (k + 1 >= planner.max_waypoints) {
      halt(HaltReason::kMaxWaypoints);
      break;
    }

    std::optional<MotionSegment> segment;
    while (!segment) {
      if (target && result.ledger.IsSeen(grid.Index(*target))) {
        target.reset();  // seen on the way; no need to finish the trip
        pending.clear();
      }
      if (!target) {
        auto goal = NearestObservationPoint(
            grid, cspace, result.ledger, exhausted,
            grid.WorldToCell(pose.position()), kObserveRadiusM);
        if (!goal) break;
        exhausted[grid.Index(goal->target)] = 1;
        target = goal->target;
        pending.assign(goal->path.begin() + 1, goal->path.end());
      }
      if (pending.empty()) {
        // At the observation point: face the unseen cell.
        const Pose turned{pose.x, pose.y,
                          Bearing(pose.position(), grid.CellCenter(*target))};
        target.reset();
        if (turned.theta_deg == pose.theta_deg) continue;
        MoveResult move = ExecuteMove(pose, turned, grid, radius, config.motion);
        if (auto* s = std::get_if<MotionSegment>(&move)) segment = std::move(*s);
        continue;
      }
      // Longest straight hop along the path that stays within d_tilde.
      std::size_t furthest = 0;
      while (furthest + 1 < pending.size() &&
             Distance(pose.position(), grid.CellCenter(pending[furthest + 1])) <=
                 planner.d_tilde_m) {
        ++furthest;
      }
      for (std::size_t j = furthest + 1; j-- > 0;) {
        const Vec2 point = grid.CellCenter(pending[j]);
        const Pose goal{point.x, point.y, Bearing(pose.position(), point)};
        MoveResult move = ExecuteMove(pose, goal, grid, radius, config.motion);
        if (auto* s = std::get_if<MotionSegment>(&move)) {
          segment = std::move(*s);
          pending.erase(pending.begin(), pending.begin() + j + 1);
          break;
        }
      }
      if (!segment) {  // blocked; pick another target
        pending.clear();
        target.reset();
      }
    }
    if (!segment) {
      halt(HaltReason::kNoFrontiers);
      break;
    }

    result.trace.push_back({k, pose, TraceKind::kAdvance});
    for (const Pose& sample : segment->samples) {
      result.trace.push_back({k, sample, TraceKind::kSample});
    }
    report.path_length_m += segment->length_m;
    pose = segment->end;
    result.segments.push_back(std::move(*segment));
  }

  report.waypoint_count = static_cast<std::int64_t>(result.waypoints.size());
  report.wall_clock_s = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - clock_start)
                            .count();
  return result;
}

}  // namespace gapnav
