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

#ifndef GAPNAV_EPISODE_H_
#define GAPNAV_EPISODE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include "gapnav/coverage.h"
#include "gapnav/grid.h"
#include "gapnav/kinematics.h"
#include "gapnav/lidar.h"
#include "gapnav/planner.h"
#include "gapnav/trace_io.h"

namespace gapnav {

enum class Strategy { kGap, kFrontier };
enum class HaltReason { kMaxWaypoints, kNoSafeHeading, kUserStop, kNoFrontiers };

std::string_view ToString(Strategy strategy);
std::optional<Strategy> ParseStrategy(std::string_view text);
std::string_view ToString(HaltReason reason);

struct OutputPaths {
  std::filesystem::path trace;
  std::filesystem::path report;
  std::filesystem::path render;
};

struct EpisodeConfig {
  std::filesystem::path map_path;
  double pgm_resolution_m = 0.05;
  Pose start;
  PlannerConfig planner;  // owns the sensor range
  double angular_step_deg = 1.0;
  MotionLimits motion;
  double noise_sigma_m = 0.0;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::kGap;
  OutputPaths outputs;

  LidarConfig lidar() const {
    return {planner.lidar_range_m, angular_step_deg};
  }
};

class EpisodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EpisodeReport {
  Strategy strategy = Strategy::kGap;
  std::int64_t waypoint_count = 0;
  double path_length_m = 0.0;
  // Distance travelled when coverage first reached its final value.
  double path_length_to_final_coverage_m = 0.0;
  std::vector<double> coverage_series;  // one entry per waypoint
  std::int64_t reverse_count = 0;
  HaltReason halt_reason = HaltReason::kMaxWaypoints;
  double wall_clock_s = 0.0;

  double final_coverage() const {
    return coverage_series.empty() ? 0.0 : coverage_series.back();
  }
};

struct EpisodeResult {
  EpisodeReport report;
  std::vector<TraceRow> trace;
  std::vector<Pose> waypoints;
  std::vector<MotionSegment> segments;
  CoverageLedger ledger;
};

// Scan, plan, move and mark coverage until the planner halts, the waypoint
// budget runs out, or `stop` is requested. Dispatches on `config.strategy`;
// the map path and output paths are ignored. Throws EpisodeError if the start
// pose is not traversable, and ScanError if it is outside the map.
EpisodeResult SimulateEpisode(const OccupancyGrid& grid,
                              const EpisodeConfig& config,
                              std::stop_token stop = {});

// Loads the map, simulates with the gap strategy and writes whichever outputs
// are configured.
EpisodeReport RunEpisode(const EpisodeConfig& config,
                         std::stop_token stop = {});

// Same, with the frontier strategy.
EpisodeReport RunFrontierBaseline(const EpisodeConfig& config,
                                  std::stop_token stop = {});

// Loads the map, simulates per `config.strategy` and writes outputs.
EpisodeResult RunConfigured(const EpisodeConfig& config,
                            std::stop_token stop = {});

// Plain-text report, one "key: value" per line. Wall-clock time is left out
// so that reports are reproducible byte for byte.
void WriteReport(const EpisodeReport& report, std::ostream& out);
std::string ReportToString(const EpisodeReport& report);

// Replays the scans at every waypoint of a trace to rebuild its coverage.
CoverageLedger ReplayCoverage(const OccupancyGrid& grid,
                              std::span<const TraceRow> trace,
                              const LidarConfig& lidar);

}  // namespace gapnav

#endif  // GAPNAV_EPISODE_H_
