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

#include "gapnav/render.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace gapnav {
namespace {

class Canvas {
 public:
  Canvas(int width, int height)
      : width_(width), height_(height),
        pixels_(static_cast<std::size_t>(width) * height * 3, 0) {}

  void Set(int x, int y, Rgb color) {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return;
    const std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 3;
    pixels_[i] = color.r;
    pixels_[i + 1] = color.g;
    pixels_[i + 2] = color.b;
  }

  void Fill(int x0, int y0, int x1, int y1, Rgb color) {
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) Set(x, y, color);
    }
  }

  // Bresenham.
  void Line(int x0, int y0, int x1, int y1, Rgb color) {
    const int dx = std::abs(x1 - x0);
    const int dy = -std::abs(y1 - y0);
    const int sx = x0 < x1 ? 1 : -1;
    const int sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    while (true) {
      Set(x0, y0, color);
      if (x0 == x1 && y0 == y1) break;
      const int e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        x0 += sx;
      }
      if (e2 <= dx) {
        err += dx;
        y0 += sy;
      }
    }
  }

  std::string ToPpm() const {
    std::string out = "P6\n" + std::to_string(width_) + " " +
                      std::to_string(height_) + "\n255\n";
    out.append(pixels_.begin(), pixels_.end());
    return out;
  }

 private:
  int width_;
  int height_;
  std::vector<char> pixels_;
};

struct Pixel {
  int x;
  int y;
};

}  // namespace

std::string RenderEpisode(const OccupancyGrid& grid,
                          const CoverageLedger& ledger,
                          std::span<const TraceRow> trace,
                          const RenderOptions& options) {
  const int scale = options.pixels_per_cell;
  if (scale < 1) throw std::invalid_argument("pixels_per_cell must be >= 1");
  if (ledger.cell_count() != grid.cell_count()) {
    throw std::invalid_argument("ledger does not match grid");
  }
  Canvas canvas(grid.width() * scale, grid.height() * scale);

  for (int y = 0; y < grid.height(); ++y) {
    const int top = (grid.height() - 1 - y) * scale;
    for (int x = 0; x < grid.width(); ++x) {
      const CellIndex cell{x, y};
      Rgb color = kUnknownColor;
      switch (grid.At(cell)) {
        case CellState::kOccupied: color = kOccupiedColor; break;
        case CellState::kFree:
          color = ledger.IsSeen(grid.Index(cell)) ? kSeenFreeColor
                                                  : kUnseenFreeColor;
          break;
        case CellState::kUnknown: color = kUnknownColor; break;
      }
      canvas.Fill(x * scale, top, x * scale + scale - 1, top + scale - 1, color);
    }
  }

  const double px_per_m = scale / grid.resolution();
  const double top_y = grid.Bounds().max.y;
  auto to_pixel = [&](const Pose& pose) {
    return Pixel{
        static_cast<int>(std::floor((pose.x - grid.origin().x) * px_per_m)),
        static_cast<int>(std::floor((top_y - pose.y) * px_per_m))};
  };

  std::vector<Pixel> waypoints;
  for (const TraceRow& row : trace) {
    if (row.kind != TraceKind::kSample) waypoints.push_back(to_pixel(row.pose));
  }
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    canvas.Line(waypoints[i - 1].x, waypoints[i - 1].y, waypoints[i].x,
                waypoints[i].y, kPathColor);
  }
  for (const Pixel& p : waypoints) {
    canvas.Fill(p.x - 1, p.y - 1, p.x + 1, p.y + 1, kWaypointColor);
  }
  if (!waypoints.empty()) {
    const Pixel start = waypoints.front();
    const Pixel end = waypoints.back();
    // Start: hollow square. End: cross.
    for (int i = -3; i <= 3; ++i) {
      canvas.Set(start.x + i, start.y - 3, kStartColor);
      canvas.Set(start.x + i, start.y + 3, kStartColor);
      canvas.Set(start.x - 3, start.y + i, kStartColor);
      canvas.Set(start.x + 3, start.y + i, kStartColor);
      canvas.Set(end.x + i, end.y + i, kEndColor);
      canvas.Set(end.x + i, end.y - i, kEndColor);
    }
  }
  return canvas.ToPpm();
}

}  // namespace gapnav
