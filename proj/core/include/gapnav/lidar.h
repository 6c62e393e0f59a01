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

#ifndef GAPNAV_LIDAR_H_
#define GAPNAV_LIDAR_H_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gapnav/geometry.h"
#include "gapnav/grid.h"

namespace gapnav {

inline constexpr double kClear = std::numeric_limits<double>::infinity();

struct Ray {
  double bearing_deg;  // relative to the pose heading, in [-90, 90]
  double range_m;      // kClear when nothing was hit within max range

  bool clear() const { return range_m == kClear; }
};

// One forward semicircular sweep.
struct Scan {
  Pose pose;
  double max_range_m = 0.0;
  double angular_step_deg = 0.0;
  std::vector<Ray> rays;  // bearings strictly increasing from -90 to +90
};

struct LidarConfig {
  double max_range_m = 5.0;
  double angular_step_deg = 1.0;
};

struct ScanResult {
  Scan scan;
  // Every cell a ray entered, including the blocking cell. May repeat.
  std::vector<CellIndex> footprint;
};

class ScanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class PoseOutOfBounds : public ScanError {
 public:
  using ScanError::ScanError;
};
class PoseInsideObstacle : public ScanError {
 public:
  using ScanError::ScanError;
};

// Number of rays for a step, or throws std::invalid_argument unless the step
// divides 180 evenly.
int RayCountForStep(double angular_step_deg);

// Walks the grid cell by cell from `origin` along world heading
// `direction_deg` and returns the distance at which the ray enters the first
// non-Free cell (cells beyond the border count as non-Free), or kClear if that
// is farther than `max_range`. When the ray passes exactly through a cell
// corner, both side neighbours are tested so a ray cannot slip diagonally
// between two blocked cells. Entered cells are appended to `visited` if given.
double CastRay(const OccupancyGrid& grid, Vec2 origin, double direction_deg,
               double max_range, std::vector<CellIndex>* visited = nullptr);

// Throws PoseOutOfBounds unless the pose lies strictly inside the map, and
// PoseInsideObstacle if the pose touches any non-Free cell.
ScanResult AcquireScan(const OccupancyGrid& grid, const Pose& pose,
                       const LidarConfig& config);

// Perturbs every finite range with zero-mean Gaussian noise truncated to
// (0, max_range]. Deterministic in `seed`; `sigma` of zero is the identity.
Scan AddRangeNoise(const Scan& scan, double sigma, std::uint64_t seed);

// "# pose=x,y,theta max_range=l" followed by "bearing_deg,range_m" rows, with
// "inf" for clear rays.
void WriteScanCsv(const Scan& scan, std::ostream& out);

}  // namespace gapnav

#endif  // GAPNAV_LIDAR_H_
