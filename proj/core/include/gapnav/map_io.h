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

#ifndef GAPNAV_MAP_IO_H_
#define GAPNAV_MAP_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "gapnav/grid.h"

namespace gapnav {

enum class MapFormat { kAsciiGrid, kPgm };

inline constexpr double kDefaultPgmResolution = 0.05;

// ASCII grid:
//   W H RES
//   H lines of W characters from {'.', '#', '?'}, top row first.
// PGM: binary P5. Gray values below 64 are Occupied, above 191 Free, anything
// else Unknown (on a 0..255 scale; other maxvals are rescaled). PGM carries no
// resolution, so `pgm_resolution` supplies it.
//
// Throws MalformedMap on any deviation from the format.
OccupancyGrid LoadMap(std::istream& in, MapFormat format,
                      double pgm_resolution = kDefaultPgmResolution);

// Picks the format from the extension: ".pgm" is PGM, anything else ASCII.
MapFormat FormatForPath(const std::filesystem::path& path);

OccupancyGrid LoadMapFile(const std::filesystem::path& path,
                          double pgm_resolution = kDefaultPgmResolution);

// Canonical ASCII form. Loading and re-saving a canonical file reproduces it
// byte for byte.
void SaveAsciiGrid(const OccupancyGrid& grid, std::ostream& out);
std::string ToAsciiGrid(const OccupancyGrid& grid);

}  // namespace gapnav

#endif  // GAPNAV_MAP_IO_H_
