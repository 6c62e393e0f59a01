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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "gapnav/grid.h"
#include "gapnav/lidar.h"
#include "gapnav/map_io.h"

namespace gapnav {
namespace {

const OccupancyGrid& Clutter() {
  static const OccupancyGrid grid =
      LoadMapFile(GAPNAV_FIXTURE_DIR "/clutter.grid");
  return grid;
}

std::vector<Pose> FreePoses(const OccupancyGrid& grid, int count) {
  std::mt19937_64 rng(5);
  const Box bounds = grid.Bounds();
  std::uniform_real_distribution<double> x(bounds.min.x, bounds.max.x);
  std::uniform_real_distribution<double> y(bounds.min.y, bounds.max.y);
  std::uniform_real_distribution<double> theta(0.0, 360.0);
  std::vector<Pose> poses;
  while (static_cast<int>(poses.size()) < count) {
    const Pose pose = MakePose(x(rng), y(rng), theta(rng));
    if (grid.IsFree(grid.WorldToCell(pose.position()))) poses.push_back(pose);
  }
  return poses;
}

void BM_CastRay(benchmark::State& state) {
  const OccupancyGrid& grid = Clutter();
  const std::vector<Pose> poses = FreePoses(grid, 256);
  const double range = static_cast<double>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    const Pose& pose = poses[i++ % poses.size()];
    benchmark::DoNotOptimize(
        CastRay(grid, pose.position(), pose.theta_deg, range));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CastRay)->Arg(5)->Arg(20);

void BM_AcquireScan(benchmark::State& state) {
  const OccupancyGrid& grid = Clutter();
  const std::vector<Pose> poses = FreePoses(grid, 64);
  const LidarConfig lidar{5.0, 1.0 / static_cast<double>(state.range(0))};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(AcquireScan(grid, poses[i++ % poses.size()], lidar));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_AcquireScan)->Arg(1)->Arg(4);

}  // namespace
}  // namespace gapnav
