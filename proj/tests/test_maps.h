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

#ifndef GAPNAV_TESTS_TEST_MAPS_H_
#define GAPNAV_TESTS_TEST_MAPS_H_

#include <filesystem>
#include <string>
#include <vector>

#include "gapnav/grid.h"
#include "gapnav/map_io.h"

namespace gapnav::testing {

inline std::filesystem::path FixturePath(const std::string& name) {
  return std::filesystem::path(GAPNAV_FIXTURE_DIR) / name;
}

inline OccupancyGrid LoadFixture(const std::string& name) {
  return LoadMapFile(FixturePath(name));
}

// Every committed fixture map.
inline std::vector<std::string> FixtureNames() {
  return {"apartment.grid", "bend.grid",        "clutter.grid",
          "corridor.grid",  "empty.grid",       "room_door.grid",
          "single_room.grid", "walled_off.grid"};
}

// Rows are given top first, as in the ASCII map format.
inline OccupancyGrid GridFromRows(const std::vector<std::string>& rows,
                                  double resolution = 1.0) {
  const int height = static_cast<int>(rows.size());
  const int width = static_cast<int>(rows.front().size());
  OccupancyGrid grid =
      OccupancyGrid::Filled(width, height, resolution, CellState::kFree);
  for (int row = 0; row < height; ++row) {
    for (int x = 0; x < width; ++x) {
      const char c = rows[row][x];
      grid.Set({x, height - 1 - row}, c == '#'   ? CellState::kOccupied
                                      : c == '?' ? CellState::kUnknown
                                                 : CellState::kFree);
    }
  }
  return grid;
}

// Free interior with a one-cell Occupied frame.
inline OccupancyGrid WalledBox(int width, int height, double resolution) {
  OccupancyGrid grid =
      OccupancyGrid::Filled(width, height, resolution, CellState::kFree);
  for (int x = 0; x < width; ++x) {
    grid.Set({x, 0}, CellState::kOccupied);
    grid.Set({x, height - 1}, CellState::kOccupied);
  }
  for (int y = 0; y < height; ++y) {
    grid.Set({0, y}, CellState::kOccupied);
    grid.Set({width - 1, y}, CellState::kOccupied);
  }
  return grid;
}

}  // namespace gapnav::testing

#endif  // GAPNAV_TESTS_TEST_MAPS_H_
