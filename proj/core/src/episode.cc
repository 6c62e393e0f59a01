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

#include "gapnav/episode.h"

#include <chrono>
#include <ostream>
#include <sstream>
#include <variant>

#include "format.h"
#include "gapnav/frontier.h"
#include "gapnav/map_io.h"
#include "gapnav/output_files.h"
#include "gapnav/render.h"

namespace gapnav {
namespace {

// SplitMix64 finalizer; decorrelates per-step noise seeds.
std::uint64_t StepSeed(std::uint64_t seed, std::int64_t step) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(step) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void CheckStart(const OccupancyGrid& grid, const Pose& start, double radius) {
  const Box bounds = grid.Bounds();
  if (!(start.x > bounds.min.x && start.x < bounds.max.x &&
        start.y > bounds.min.y && start.y < bounds.max.y)) {
    throw PoseOutOfBounds("start pose is outside the map");
  }
  if (!IsTraversable(grid, start.position(), radius)) {
    throw EpisodeError("start pose is not traversable for radius " +
                       internal::FormatDouble(radius));
  }
}

EpisodeResult SimulateGapEpisode(const OccupancyGrid& grid,
                                 const EpisodeConfig& config,
                                 std::stop_token stop) {
  const PlannerConfig& planner = config.planner;
  planner.Validate();
  const Pose start = MakePose(config.start.x, config.start.y,
                              config.start.theta_deg);
  CheckStart(grid, start, planner.robot_radius_m);
  const auto clock_start = std::chrono::steady_clock::now();

  const CoverageMeter meter(grid, grid.WorldToCell(start.position()));
  const LidarConfig lidar = config.lidar();
  EpisodeResult result;
  result.ledger = CoverageLedger(grid.cell_count());
  EpisodeReport& report = result.report;
  report.strategy = Strategy::kGap;

  PlannerState state(start, planner);
  for (std::int64_t k = 0;; ++k) {
    const ScanResult sensed = AcquireScan(grid, state.pose, lidar);
    result.ledger.MarkSeen(grid, sensed.footprint);
    report.coverage_series.push_back(meter.Fraction(result.ledger));
    result.waypoints.push_back(state.pose);

    auto halt = [&](HaltReason reason) {
      report.halt_reason = reason;
      result.trace.push_back({k, state.pose, TraceKind::kHalt});
    };
    if (stop.stop_requested()) {
      halt(HaltReason::kUserStop);
      break;
    }
    if (k + 1 >= planner.max_waypoints) {
      halt(HaltReason::kMaxWaypoints);
      break;
    }

    const Scan scan =
        AddRangeNoise(sensed.scan, config.noise_sigma_m, StepSeed(config.seed, k));
    const Decision decision = PlanStep(state, scan, grid, planner);
    if (decision.kind == DecisionKind::kHalt) {
      halt(HaltReason::kNoSafeHeading);
      break;
    }
    const bool reversing = decision.kind == DecisionKind::kReverse;
    result.trace.push_back(
        {k, state.pose, reversing ? TraceKind::kReverse : TraceKind::kAdvance});

    MoveResult move = ExecuteMove(state.pose, decision.next, grid,
                                  planner.robot_radius_m, config.motion);
    if (std::holds_alternative<CollisionReport>(move)) {
      throw std::logic_error("planner accepted a move that collides");
    }
    MotionSegment& segment = std::get<MotionSegment>(move);
    for (const Pose& sample : segment.samples) {
      result.trace.push_back({k, sample, TraceKind::kSample});
    }
    report.path_length_m += segment.length_m;
    if (reversing) ++report.reverse_count;
    result.segments.push_back(std::move(segment));
    ApplyDecision(state, decision);
  }

  report.waypoint_count = static_cast<std::int64_t>(result.waypoints.size());
  report.wall_clock_s = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - clock_start)
                            .count();
  return result;
}

void WriteOutputs(const OccupancyGrid& grid, const EpisodeConfig& config,
                  const EpisodeResult& result) {
  const OutputPaths& out = config.outputs;
  if (!out.trace.empty()) {
    std::ostringstream trace;
    WriteTraceCsv(result.trace, trace);
    WriteFileAtomically(out.trace, trace.str());
  }
  if (!out.report.empty()) {
    WriteFileAtomically(out.report, ReportToString(result.report));
  }
  if (!out.render.empty()) {
    WriteFileAtomically(out.render,
                        RenderEpisode(grid, result.ledger, result.trace));
  }
}

}  // namespace

std::string_view ToString(Strategy strategy) {
  switch (strategy) {
    case Strategy::kGap: return "gap";
    case Strategy::kFrontier: return "frontier";
  }
  return "unknown";
}

std::optional<Strategy> ParseStrategy(std::string_view text) {
  if (text == "gap") return Strategy::kGap;
  if (text == "frontier") return Strategy::kFrontier;
  return std::nullopt;
}

std::string_view ToString(HaltReason reason) {
  switch (reason) {
    case HaltReason::kMaxWaypoints: return "MaxWaypoints";
    case HaltReason::kNoSafeHeading: return "NoSafeHeading";
    case HaltReason::kUserStop: return "UserStop";
    case HaltReason::kNoFrontiers: return "NoFrontiers";
  }
  return "Unknown";
}

EpisodeResult SimulateEpisode(const OccupancyGrid& grid,
                              const EpisodeConfig& config,
                              std::stop_token stop) {
  EpisodeResult result;
  switch (config.strategy) {
    case Strategy::kGap:
      result = SimulateGapEpisode(grid, config, stop);
      break;
    case Strategy::kFrontier:
      result = SimulateFrontierEpisode(grid, config, stop);
      break;
    default:
      throw std::invalid_argument("unknown strategy");
  }
  // Segment i leads from waypoint i to waypoint i + 1.
  EpisodeReport& report = result.report;
  const double final_coverage = report.final_coverage();
  for (std::size_t i = 0; i < report.coverage_series.size() &&
                          report.coverage_series[i] < final_coverage;
       ++i) {
    report.path_length_to_final_coverage_m += result.segments[i].length_m;
  }
  return result;
}

EpisodeResult RunConfigured(const EpisodeConfig& config, std::stop_token stop) {
  const OccupancyGrid grid =
      LoadMapFile(config.map_path, config.pgm_resolution_m);
  EpisodeResult result = SimulateEpisode(grid, config, stop);
  WriteOutputs(grid, config, result);
  return result;
}

EpisodeReport RunEpisode(const EpisodeConfig& config, std::stop_token stop) {
  EpisodeConfig gap = config;
  gap.strategy = Strategy::kGap;
  return RunConfigured(gap, stop).report;
}

EpisodeReport RunFrontierBaseline(const EpisodeConfig& config,
                                  std::stop_token stop) {
  EpisodeConfig frontier = config;
  frontier.strategy = Strategy::kFrontier;
  return RunConfigured(frontier, stop).report;
}

void WriteReport(const EpisodeReport& report, std::ostream& out) {
  using internal::FormatDouble;
  out << "strategy: " << ToString(report.strategy) << '\n'
      << "waypoint_count: " << report.waypoint_count << '\n'
      << "path_length_m: " << FormatDouble(report.path_length_m) << '\n'
      << "path_length_to_final_coverage_m: "
      << FormatDouble(report.path_length_to_final_coverage_m) << '\n'
      << "final_coverage: " << FormatDouble(report.final_coverage()) << '\n'
      << "reverse_count: " << report.reverse_count << '\n'
      << "halt_reason: " << ToString(report.halt_reason) << '\n'
      << "coverage_series: ";
  for (std::size_t i = 0; i < report.coverage_series.size(); ++i) {
    if (i > 0) out << ',';
    out << FormatDouble(report.coverage_series[i]);
  }
  out << '\n';
}

std::string ReportToString(const EpisodeReport& report) {
  std::ostringstream out;
  WriteReport(report, out);
  return out.str();
}

CoverageLedger ReplayCoverage(const OccupancyGrid& grid,
                              std::span<const TraceRow> trace,
                              const LidarConfig& lidar) {
  CoverageLedger ledger(grid.cell_count());
  for (const TraceRow& row : trace) {
    if (row.kind == TraceKind::kSample) continue;
    ledger.MarkSeen(grid, AcquireScan(grid, row.pose, lidar).footprint);
  }
  return ledger;
}

}  // namespace gapnav
