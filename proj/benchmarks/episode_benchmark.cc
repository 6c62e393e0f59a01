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

#include "benchmark/benchmark.h"
#include "gapnav/episode.h"
#include "gapnav/frontier.h"
#include "gapnav/map_io.h"

namespace gapnav {
namespace {

void BM_ApartmentEpisode(benchmark::State& state) {
  const OccupancyGrid grid =
      LoadMapFile(GAPNAV_FIXTURE_DIR "/apartment.grid");
  EpisodeConfig config;
  config.planner = PlannerConfig::ForRange(5.0);
  config.start = MakePose(2, 2, 90);
  config.strategy = state.range(0) ? Strategy::kFrontier : Strategy::kGap;
  for (auto _ : state) {
    const EpisodeResult result = config.strategy == Strategy::kGap
                                     ? SimulateEpisode(grid, config)
                                     : SimulateFrontierEpisode(grid, config);
    state.counters["waypoints"] =
        static_cast<double>(result.report.waypoint_count);
    state.counters["coverage"] = result.report.final_coverage();
  }
}
BENCHMARK(BM_ApartmentEpisode)
    ->ArgName("frontier")
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace gapnav
