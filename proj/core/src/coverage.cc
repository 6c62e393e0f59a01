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

#include "gapnav/coverage.h"

#include <stdexcept>
#include <queue>

namespace gapnav {

CoverageLedger::CoverageLedger(std::size_t cell_count)
    : cell_count_(cell_count), words_((cell_count + 63) / 64, 0) {}

void CoverageLedger::MarkSeen(std::size_t index) {
  std::uint64_t& word = words_[index >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if ((word & bit) == 0) {
    word |= bit;
    ++seen_count_;
  }
}

void CoverageLedger::MarkSeen(const OccupancyGrid& grid,
                              std::span<const CellIndex> cells) {
  if (grid.cell_count() != cell_count_) {
    throw std::invalid_argument("ledger does not match grid size");
  }
  for (const CellIndex& cell : cells) {
    if (!grid.Contains(cell)) throw std::out_of_range("cell outside grid");
    MarkSeen(grid.Index(cell));
  }
}

ReachableSet ReachableSet::FloodFill(const OccupancyGrid& grid,
                                     CellIndex start) {
  if (!grid.Contains(start) || grid.At(start) != CellState::kFree) {
    throw std::invalid_argument("flood fill must start on a Free cell");
  }
  ReachableSet set;
  set.mask_.assign(grid.cell_count(), 0);
  std::queue<CellIndex> frontier;
  set.mask_[grid.Index(start)] = 1;
  frontier.push(start);
  constexpr CellIndex kSteps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  while (!frontier.empty()) {
    const CellIndex cell = frontier.front();
    frontier.pop();
    ++set.size_;
    for (const CellIndex& step : kSteps) {
      const CellIndex next{cell.x + step.x, cell.y + step.y};
      if (!grid.IsFree(next)) continue;
      std::uint8_t& seen = set.mask_[grid.Index(next)];
      if (seen) continue;
      seen = 1;
      frontier.push(next);
    }
  }
  return set;
}

CoverageMeter::CoverageMeter(const OccupancyGrid& grid, CellIndex start)
    : free_mask_(grid.cell_count(), 0), free_count_(0) {
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    if (grid.cells()[i] == CellState::kFree) {
      free_mask_[i] = 1;
      ++free_count_;
    }
  }
  if (free_count_ == 0) throw NoFreeCells("map has no Free cells");
  reachable_ = ReachableSet::FloodFill(grid, start);
}

double CoverageMeter::Fraction(const CoverageLedger& ledger) const {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < free_mask_.size(); ++i) {
    if (reachable_.Contains(i) && ledger.IsSeen(i)) ++seen;
  }
  return static_cast<double>(seen) / static_cast<double>(reachable_.size());
}

double CoverageMeter::FractionOfAllFree(const CoverageLedger& ledger) const {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < free_mask_.size(); ++i) {
    if (free_mask_[i] && ledger.IsSeen(i)) ++seen;
  }
  return static_cast<double>(seen) / static_cast<double>(free_count_);
}

}  // namespace gapnav
