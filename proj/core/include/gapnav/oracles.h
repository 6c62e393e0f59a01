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

#ifndef GAPNAV_ORACLES_H_
#define GAPNAV_ORACLES_H_

// Slow reference computations used by the test suites and `gapnav selfcheck`.
// None of these share code with the production paths they check.

#include <vector>

#include "gapnav/geometry.h"
#include "gapnav/grid.h"
#include "gapnav/lidar.h"
#include "gapnav/safe_heading.h"

namespace gapnav::oracle {

// Distance along the ray to the first sample point (spaced `step`) that falls
// in a non-Free or out-of-map cell, marching up to `limit`; kClear if none.
double MarchRay(const OccupancyGrid& grid, Vec2 origin, double direction_deg,
                double limit, double step);

// Length of the ray's passage through the closed box of `cell`; 0 when the
// ray misses the box or only touches it.
double ChordThroughCell(const OccupancyGrid& grid, Vec2 origin,
                        double direction_deg, CellIndex cell);

// True when every non-Free cell touching the point `hit_range` along the ray
// is crossed for less than `step`. A marcher with that step can then pass a
// blocked cell without sampling inside it, so disagreeing with it is no error.
bool HitNarrowerThanStep(const OccupancyGrid& grid, Vec2 origin,
                         double direction_deg, double hit_range, double step);

// Visits every cell of the grid and checks the disc against each cell box.
bool DiscIsFree(const OccupancyGrid& grid, Vec2 p, double radius);

// Distance from `p` to the nearest Occupied cell over all cells; kClear when
// the map has none.
double DistanceToNearestOccupied(const OccupancyGrid& grid, Vec2 p);

struct OracleGap {
  int lo_bearing;
  int hi_bearing;
  bool clearance_ok;
};

// Labels each whole-degree bearing safe or unsafe and groups runs. Requires a
// 1 degree scan.
std::vector<OracleGap> PerDegreeGaps(const Scan& scan, double radius,
                                     double d_tilde, double threshold);

}  // namespace gapnav::oracle

#endif  // GAPNAV_ORACLES_H_
