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

#include "gapnav/grid.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gapnav {

OccupancyGrid::OccupancyGrid(int width, int height, double resolution,
                             Vec2 origin, std::vector<CellState> cells)
    : width_(width),
      height_(height),
      resolution_(resolution),
      origin_(origin),
      cells_(std::move(cells)) {
  if (width <= 0 || height <= 0) {
    std::ostringstream msg;
    msg << "grid dimensions must be positive, got " << width << "x" << height;
    throw MalformedMap(msg.str());
  }
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw MalformedMap("grid resolution must be positive");
  }
  if (static_cast<std::size_t>(width) * static_cast<std::size_t>(height) !=
      cells_.size()) {
    std::ostringstream msg;
    msg << "grid of " << width << "x" << height << " needs "
        << static_cast<std::size_t>(width) * height << " cells, got "
        << cells_.size();
    throw MalformedMap(msg.str());
  }
}

OccupancyGrid OccupancyGrid::Filled(int width, int height, double resolution,
                                    CellState fill, Vec2 origin) {
  if (width <= 0 || height <= 0) {
    throw MalformedMap("grid dimensions must be positive");
  }
  return OccupancyGrid(
      width, height, resolution, origin,
      std::vector<CellState>(static_cast<std::size_t>(width) * height, fill));
}

Box OccupancyGrid::Bounds() const {
  return {origin_, {origin_.x + width_ * resolution_,
                    origin_.y + height_ * resolution_}};
}

void OccupancyGrid::Set(CellIndex cell, CellState state) {
  if (!Contains(cell)) throw std::out_of_range("cell outside grid");
  cells_[Index(cell)] = state;
}

CellIndex OccupancyGrid::WorldToCell(Vec2 p) const {
  return {static_cast<int>(std::floor((p.x - origin_.x) / resolution_)),
          static_cast<int>(std::floor((p.y - origin_.y) / resolution_))};
}

Vec2 OccupancyGrid::CellCenter(CellIndex cell) const {
  return {origin_.x + (cell.x + 0.5) * resolution_,
          origin_.y + (cell.y + 0.5) * resolution_};
}

Box OccupancyGrid::CellBounds(CellIndex cell) const {
  return {{origin_.x + cell.x * resolution_, origin_.y + cell.y * resolution_},
          {origin_.x + (cell.x + 1) * resolution_,
           origin_.y + (cell.y + 1) * resolution_}};
}

std::size_t OccupancyGrid::Count(CellState state) const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), state));
}

bool IsTraversable(const OccupancyGrid& grid, Vec2 p, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  const Box bounds = grid.Bounds();
  if (!(p.x - radius > bounds.min.x && p.x + radius < bounds.max.x &&
        p.y - radius > bounds.min.y && p.y + radius < bounds.max.y)) {
    return false;
  }
  // One extra cell on each side absorbs rounding in the division; the exact
  // box distance decides.
  const CellIndex lo = grid.WorldToCell({p.x - radius, p.y - radius});
  const CellIndex hi = grid.WorldToCell({p.x + radius, p.y + radius});
  for (int y = lo.y - 1; y <= hi.y + 1; ++y) {
    for (int x = lo.x - 1; x <= hi.x + 1; ++x) {
      const CellIndex cell{x, y};
      if (grid.IsFree(cell)) continue;
      if (DistanceToBox(p, grid.CellBounds(cell)) <= radius) return false;
    }
  }
  return true;
}

}  // namespace gapnav
