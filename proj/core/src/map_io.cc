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

#include "gapnav/map_io.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

namespace gapnav {
namespace {

constexpr int kMaxDimension = 1 << 15;

void StripCarriageReturn(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string> SplitWhitespace(const std::string& line) {
  std::istringstream in(line);
  return {std::istream_iterator<std::string>(in),
          std::istream_iterator<std::string>()};
}

int ParseDimension(const std::string& token, const char* what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value <= 0 ||
      value > kMaxDimension) {
    throw MalformedMap(std::string("invalid map ") + what + " '" + token + "'");
  }
  return value;
}

OccupancyGrid LoadAsciiGrid(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw MalformedMap("empty map");
  StripCarriageReturn(line);
  const std::vector<std::string> header = SplitWhitespace(line);
  if (header.size() != 3) {
    throw MalformedMap("map header must be 'W H RES', got '" + line + "'");
  }
  const int width = ParseDimension(header[0], "width");
  const int height = ParseDimension(header[1], "height");
  double resolution = 0.0;
  {
    const std::string& t = header[2];
    const auto [ptr, ec] =
        std::from_chars(t.data(), t.data() + t.size(), resolution);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      throw MalformedMap("invalid map resolution '" + t + "'");
    }
    if (!(resolution > 0.0) || !std::isfinite(resolution)) {
      throw MalformedMap("map resolution must be positive, got '" + t + "'");
    }
  }

  std::vector<CellState> cells(static_cast<std::size_t>(width) * height);
  for (int row = 0; row < height; ++row) {
    if (!std::getline(in, line)) {
      throw MalformedMap("map has " + std::to_string(row) + " rows, expected " +
                         std::to_string(height));
    }
    StripCarriageReturn(line);
    if (static_cast<int>(line.size()) != width) {
      throw MalformedMap("map row " + std::to_string(row) + " has " +
                         std::to_string(line.size()) + " columns, expected " +
                         std::to_string(width));
    }
    // Row 0 of the file is the top of the map.
    const int y = height - 1 - row;
    for (int x = 0; x < width; ++x) {
      CellState state;
      switch (line[x]) {
        case '.': state = CellState::kFree; break;
        case '#': state = CellState::kOccupied; break;
        case '?': state = CellState::kUnknown; break;
        default:
          throw MalformedMap(std::string("illegal map symbol '") + line[x] +
                             "' at row " + std::to_string(row) + ", column " +
                             std::to_string(x));
      }
      cells[static_cast<std::size_t>(y) * width + x] = state;
    }
  }
  while (std::getline(in, line)) {
    StripCarriageReturn(line);
    if (line.find_first_not_of(" \t") != std::string::npos) {
      throw MalformedMap("map has more than " + std::to_string(height) +
                         " rows");
    }
  }
  return OccupancyGrid(width, height, resolution, {}, std::move(cells));
}

// Reads the next header token of a PNM file, skipping comments.
std::string NextPnmToken(std::istream& in) {
  std::string token;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!token.empty()) {
        in.unget();
        break;
      }
      continue;
    }
    token.push_back(static_cast<char>(c));
  }
  if (token.empty()) throw MalformedMap("truncated PGM header");
  return token;
}

OccupancyGrid LoadPgm(std::istream& in, double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw MalformedMap("PGM resolution must be positive");
  }
  if (NextPnmToken(in) != "P5") throw MalformedMap("not a binary PGM (P5)");
  const int width = ParseDimension(NextPnmToken(in), "width");
  const int height = ParseDimension(NextPnmToken(in), "height");
  const std::string maxval_token = NextPnmToken(in);
  int maxval = 0;
  const auto [ptr, ec] = std::from_chars(
      maxval_token.data(), maxval_token.data() + maxval_token.size(), maxval);
  if (ec != std::errc() || ptr != maxval_token.data() + maxval_token.size() ||
      maxval <= 0 || maxval > 65535) {
    throw MalformedMap("invalid PGM maxval '" + maxval_token + "'");
  }
  // Exactly one whitespace byte separates the header from the raster.
  if (!std::isspace(in.get())) throw MalformedMap("malformed PGM header");

  const int bytes_per_pixel = maxval > 255 ? 2 : 1;
  const std::size_t pixel_count = static_cast<std::size_t>(width) * height;
  std::vector<unsigned char> raster(pixel_count * bytes_per_pixel);
  in.read(reinterpret_cast<char*>(raster.data()),
          static_cast<std::streamsize>(raster.size()));
  if (static_cast<std::size_t>(in.gcount()) != raster.size()) {
    throw MalformedMap("truncated PGM raster");
  }

  std::vector<CellState> cells(pixel_count);
  for (int row = 0; row < height; ++row) {
    const int y = height - 1 - row;
    for (int x = 0; x < width; ++x) {
      const std::size_t i = static_cast<std::size_t>(row) * width + x;
      int value = raster[i * bytes_per_pixel];
      if (bytes_per_pixel == 2) {
        value = (value << 8) | raster[i * bytes_per_pixel + 1];
      }
      const double gray =
          maxval == 255 ? value : value * 255.0 / static_cast<double>(maxval);
      CellState state = CellState::kUnknown;
      if (gray < 64.0) {
        state = CellState::kOccupied;
      } else if (gray > 191.0) {
        state = CellState::kFree;
      }
      cells[static_cast<std::size_t>(y) * width + x] = state;
    }
  }
  return OccupancyGrid(width, height, resolution, {}, std::move(cells));
}

}  // namespace

OccupancyGrid LoadMap(std::istream& in, MapFormat format,
                      double pgm_resolution) {
  switch (format) {
    case MapFormat::kAsciiGrid:
      return LoadAsciiGrid(in);
    case MapFormat::kPgm:
      return LoadPgm(in, pgm_resolution);
  }
  throw MalformedMap("unknown map format");
}

MapFormat FormatForPath(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(c));
  return ext == ".pgm" ? MapFormat::kPgm : MapFormat::kAsciiGrid;
}

OccupancyGrid LoadMapFile(const std::filesystem::path& path,
                          double pgm_resolution) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open map '" + path.string() + "'");
  return LoadMap(in, FormatForPath(path), pgm_resolution);
}

void SaveAsciiGrid(const OccupancyGrid& grid, std::ostream& out) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), grid.resolution());
  out << grid.width() << ' ' << grid.height() << ' '
      << std::string_view(buffer, result.ptr - buffer) << '\n';
  std::string row(grid.width(), '.');
  for (int y = grid.height() - 1; y >= 0; --y) {
    for (int x = 0; x < grid.width(); ++x) {
      switch (grid.At({x, y})) {
        case CellState::kFree: row[x] = '.'; break;
        case CellState::kOccupied: row[x] = '#'; break;
        case CellState::kUnknown: row[x] = '?'; break;
      }
    }
    out << row << '\n';
  }
}

std::string ToAsciiGrid(const OccupancyGrid& grid) {
  std::ostringstream out;
  SaveAsciiGrid(grid, out);
  return out.str();
}

}  // namespace gapnav
