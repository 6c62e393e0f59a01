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

#ifndef GAPNAV_COVERAGE_H_
#define GAPNAV_COVERAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "gapnav/grid.h"

namespace gapnav {

class NoFreeCells : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One bit per grid cell. Bits are only ever set.
class CoverageLedger {
 public:
  CoverageLedger() = default;
  explicit CoverageLedger(std::size_t cell_count);

  // Cells must lie inside `grid`, which must match the ledger size.
  void MarkSeen(const OccupancyGrid& grid, std::span<const CellIndex> cells);
  void MarkSeen(std::size_t index);

  bool IsSeen(std::size_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  std::size_t seen_count() const { return seen_count_; }
  std::size_t cell_count() const { return cell_count_; }

 private:
  std::size_t cell_count_ = 0;
  std::size_t seen_count_ = 0;
  std::vector<std::uint64_t> words_;
};

// Free cells 4-connected to a start cell.
class ReachableSet {
 public:
  // Throws std::invalid_argument if `start` is not a Free cell.
  static ReachableSet FloodFill(const OccupancyGrid& grid, CellIndex start);

  bool Contains(std::size_t index) const { return mask_[index] != 0; }
  std::size_t size() const { return size_; }

 private:
  std::vector<std::uint8_t> mask_;
  std::size_t size_ = 0;
};

// Explored fraction of the free space reachable from the episode start. The
// reachable set is computed once at construction.
class CoverageMeter {
 public:
  // Throws NoFreeCells if the map has no Free cell.
  CoverageMeter(const OccupancyGrid& grid, CellIndex start);

  // Seen reachable cells over reachable cells, in [0, 1].
  double Fraction(const CoverageLedger& ledger) const;
  // Seen Free cells over all Free cells, reachable or not.
  double FractionOfAllFree(const CoverageLedger& ledger) const;

  const ReachableSet& reachable() const { return reachable_; }

 private:
  std::vector<std::uint8_t> free_mask_;
  ReachableSet reachable_;
  std::size_t free_count_;
};

}  // namespace gapnav

#endif  // GAPNAV_COVERAGE_H_
