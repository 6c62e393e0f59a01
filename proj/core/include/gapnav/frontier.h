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

#ifndef GAPNAV_FRONTIER_H_
#define GAPNAV_FRONTIER_H_

#include <cstdint>
#include <optional>
#include <stop_token>
#include <vector>

#include "gapnav/coverage.h"
#include "gapnav/episode.h"
#include "gapnav/grid.h"

namespace gapnav {

// Cells whose centers admit the robot disc.
std::vector<std::uint8_t> ConfigurationSpace(const OccupancyGrid& grid,
                                             double radius);

// A frontier cell is a seen Free cell with an unseen 4-neighbour.
bool IsFrontier(const OccupancyGrid& grid, const CoverageLedger& ledger,
                CellIndex cell);

// True iff the straight segment between the two cell centers crosses only
// Free cells.
bool LineOfSight(const OccupancyGrid& grid, CellIndex from, CellIndex to);

// Where to go next: a configuration-space cell from which an unseen cell on
// the frontier can be observed, and the path there.
struct FrontierGoal {
  std::vector<CellIndex> path;  // 8-connected, endpoints included
  CellIndex target;             // the unseen cell to face on arrival
};

// Breadth-first search over configuration-space cells from `from` for the
// nearest cell that has an unseen, non-exhausted Free cell with a seen Free
// 4-neighbour within `observe_radius_m` and in line of sight. Diagonal steps
// never cut corners.
std::optional<FrontierGoal> NearestObservationPoint(
    const OccupancyGrid& grid, const std::vector<std::uint8_t>& cspace,
    const CoverageLedger& ledger, const std::vector<std::uint8_t>& exhausted,
    CellIndex from, double observe_radius_m);

// Greedy nearest-frontier exploration over shortest grid paths: travel to
// the nearest observation point, then face the unseen cell. Reports the
// same metrics as the gap strategy.
EpisodeResult SimulateFrontierEpisode(const OccupancyGrid& grid,
                                      const EpisodeConfig& config,
                                      std::stop_token stop = {});

}  // namespace gapnav

#endif  // GAPNAV_FRONTIER_H_
