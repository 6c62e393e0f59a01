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

#ifndef GAPNAV_RENDER_H_
#define GAPNAV_RENDER_H_

#include <cstdint>
#include <span>
#include <string>

#include "gapnav/coverage.h"
#include "gapnav/grid.h"
#include "gapnav/trace_io.h"

namespace gapnav {

struct RenderOptions {
  int pixels_per_cell = 4;
};

struct Rgb {
  std::uint8_t r, g, b;
  friend bool operator==(Rgb, Rgb) = default;
};

inline constexpr Rgb kOccupiedColor{0, 0, 0};
inline constexpr Rgb kSeenFreeColor{255, 255, 255};
inline constexpr Rgb kUnseenFreeColor{160, 160, 160};
inline constexpr Rgb kUnknownColor{64, 64, 64};
inline constexpr Rgb kPathColor{220, 30, 30};
inline constexpr Rgb kWaypointColor{30, 60, 220};
inline constexpr Rgb kStartColor{0, 170, 0};
inline constexpr Rgb kEndColor{200, 0, 200};

// Binary PPM (P6). Row 0 of the image is the top of the map.
std::string RenderEpisode(const OccupancyGrid& grid,
                          const CoverageLedger& ledger,
                          std::span<const TraceRow> trace,
                          const RenderOptions& options = {});

}  // namespace gapnav

#endif  // GAPNAV_RENDER_H_
