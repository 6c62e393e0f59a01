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

#ifndef GAPNAV_GRID_H_
#define GAPNAV_GRID_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gapnav/geometry.h"

namespace gapnav {

enum class CellState : std::uint8_t { kFree, kOccupied, kUnknown };

// Integer cell coordinates. `x` grows rightward, `y` grows upward, so cell
// (0, 0) is the bottom-left cell of the map.
struct CellIndex {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

class MalformedMap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Static 2D world. Cells are stored row-major from the bottom row up. The
// grid is never mutated during an episode, so a const instance may be shared
// across threads.
class OccupancyGrid {
 public:
  // Throws MalformedMap when the dimensions disagree with `cells` or the
  // resolution is not a positive finite number.
  OccupancyGrid(int width, int height, double resolution, Vec2 origin,
                std::vector<CellState> cells);

  static OccupancyGrid Filled(int width, int height, double resolution,
                              CellState fill, Vec2 origin = {});

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  Vec2 origin() const { return origin_; }
  std::size_t cell_count() const { return cells_.size(); }
  std::span<const CellState> cells() const { return cells_; }

  // World-space extent of the map.
  Box Bounds() const;

  bool Contains(CellIndex cell) const {
    return cell.x >= 0 && cell.y >= 0 && cell.x < width_ && cell.y < height_;
  }
  std::size_t Index(CellIndex cell) const {
    return static_cast<std::size_t>(cell.y) * width_ + cell.x;
  }
  CellIndex FromIndex(std::size_t index) const {
    return {static_cast<int>(index % width_), static_cast<int>(index / width_)};
  }

  // Unchecked access; `cell` must be in bounds.
  CellState At(CellIndex cell) const { return cells_[Index(cell)]; }
  // Cells outside the map read as Occupied.
  CellState StateOrOccupied(CellIndex cell) const {
    return Contains(cell) ? At(cell) : CellState::kOccupied;
  }
  bool IsFree(CellIndex cell) const {
    return StateOrOccupied(cell) == CellState::kFree;
  }

  void Set(CellIndex cell, CellState state);

  // Cell containing `p` under half-open cell extents. May be out of bounds.
  CellIndex WorldToCell(Vec2 p) const;
  Vec2 CellCenter(CellIndex cell) const;
  Box CellBounds(CellIndex cell) const;

  std::size_t Count(CellState state) const;

 private:
  int width_;
  int height_;
  double resolution_;
  Vec2 origin_;
  std::vector<CellState> cells_;
};

// True iff every cell whose closed extent intersects the closed disc of
// `radius` around `p` is Free. Discs touching the map border are not
// traversable.
bool IsTraversable(const OccupancyGrid& grid, Vec2 p, double radius);

}  // namespace gapnav

#endif  // GAPNAV_GRID_H_
