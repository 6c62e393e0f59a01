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

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gapnav/map_io.h"
#include "gapnav/oracles.h"
#include "gtest/gtest.h"
#include "test_maps.h"

namespace gapnav {
namespace {

OccupancyGrid LoadAscii(const std::string& text) {
  std::istringstream in(text);
  return LoadMap(in, MapFormat::kAsciiGrid);
}

TEST(MapIoTest, AllFreeAsciiMap) {
  const OccupancyGrid grid = LoadAscii("3 3 0.5\n...\n...\n...\n");
  EXPECT_EQ(grid.width(), 3);
  EXPECT_EQ(grid.height(), 3);
  EXPECT_EQ(grid.resolution(), 0.5);
  EXPECT_EQ(grid.Count(CellState::kFree), 9u);
}

TEST(MapIoTest, CenterObstacle) {
  const OccupancyGrid grid = LoadAscii("3 3 1\n...\n.#.\n...\n");
  EXPECT_EQ(grid.Count(CellState::kFree), 8u);
  EXPECT_EQ(grid.At({1, 1}), CellState::kOccupied);
}

TEST(MapIoTest, TopRowOfFileIsHighestY) {
  const OccupancyGrid grid = LoadAscii("2 2 1\n#?\n..\n");
  EXPECT_EQ(grid.At({0, 1}), CellState::kOccupied);
  EXPECT_EQ(grid.At({1, 1}), CellState::kUnknown);
  EXPECT_EQ(grid.At({0, 0}), CellState::kFree);
}

TEST(MapIoTest, RejectsMalformedAscii) {
  EXPECT_THROW(LoadAscii("3 3 1\n...\n...\n"), MalformedMap);
  EXPECT_THROW(LoadAscii("3 3 1\n...\n..x\n...\n"), MalformedMap);
  EXPECT_THROW(LoadAscii("3 3 0\n...\n...\n...\n"), MalformedMap);
  EXPECT_THROW(LoadAscii("3 3 1\n....\n...\n...\n"), MalformedMap);
  EXPECT_THROW(LoadAscii("3 3 -1\n...\n...\n...\n"), MalformedMap);
  EXPECT_THROW(LoadAscii(""), MalformedMap);
}

std::string Pgm(int width, int height, int maxval,
                const std::vector<int>& pixels) {
  std::string data = "P5\n# comment\n" + std::to_string(width) + " " +
                     std::to_string(height) + "\n" + std::to_string(maxval) +
                     "\n";
  for (const int p : pixels) {
    if (maxval > 255) data.push_back(static_cast<char>(p >> 8));
    data.push_back(static_cast<char>(p & 0xff));
  }
  return data;
}

// Independent decoding of the thresholds for 8-bit images.
CellState DecodePixel(int value) {
  if (value < 64) return CellState::kOccupied;
  if (value > 191) return CellState::kFree;
  return CellState::kUnknown;
}

TEST(MapIoTest, PgmThresholds) {
  std::istringstream in(Pgm(3, 1, 255, {0, 255, 128}));
  const OccupancyGrid grid = LoadMap(in, MapFormat::kPgm, 0.05);
  EXPECT_EQ(grid.At({0, 0}), CellState::kOccupied);
  EXPECT_EQ(grid.At({1, 0}), CellState::kFree);
  EXPECT_EQ(grid.At({2, 0}), CellState::kUnknown);
  EXPECT_EQ(grid.resolution(), 0.05);
}

TEST(MapIoTest, PgmMatchesPerPixelDecoding) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> value(0, 255);
  const int width = 37, height = 23;
  std::vector<int> pixels(width * height);
  for (int& p : pixels) p = value(rng);
  for (const int boundary : {63, 64, 191, 192}) pixels[boundary] = boundary;
  std::istringstream in(Pgm(width, height, 255, pixels));
  const OccupancyGrid grid = LoadMap(in, MapFormat::kPgm);
  for (int row = 0; row < height; ++row) {
    for (int x = 0; x < width; ++x) {
      ASSERT_EQ(grid.At({x, height - 1 - row}),
                DecodePixel(pixels[row * width + x]))
          << "pixel (" << x << ", " << row << ")";
    }
  }
}

TEST(MapIoTest, PgmSixteenBitValuesAreRescaled) {
  std::istringstream in(Pgm(3, 1, 65535, {0, 65535, 32768}));
  const OccupancyGrid grid = LoadMap(in, MapFormat::kPgm);
  EXPECT_EQ(grid.At({0, 0}), CellState::kOccupied);
  EXPECT_EQ(grid.At({1, 0}), CellState::kFree);
  EXPECT_EQ(grid.At({2, 0}), CellState::kUnknown);
}

TEST(MapIoTest, RejectsMalformedPgm) {
  auto load = [](const std::string& data) {
    std::istringstream in(data);
    return LoadMap(in, MapFormat::kPgm);
  };
  EXPECT_THROW(load("P2\n1 1\n255\n0\n"), MalformedMap);
  EXPECT_THROW(load(Pgm(2, 2, 255, {0, 0, 0})), MalformedMap);
  EXPECT_THROW(load("P5\n1 1\n0\n"), MalformedMap);
}

TEST(MapIoTest, FormatFollowsExtension) {
  EXPECT_EQ(FormatForPath("a/b.pgm"), MapFormat::kPgm);
  EXPECT_EQ(FormatForPath("a/b.grid"), MapFormat::kAsciiGrid);
  EXPECT_EQ(FormatForPath("map"), MapFormat::kAsciiGrid);
}

TEST(MapIoTest, CanonicalAsciiRoundTripsByteForByte) {
  const std::string canonical = "4 2 0.25\n.#?.\n..#.\n";
  EXPECT_EQ(ToAsciiGrid(LoadAscii(canonical)), canonical);
}

TEST(MapIoTest, FixturesRoundTripByteForByte) {
  for (const std::string& name : testing::FixtureNames()) {
    std::ifstream in(testing::FixturePath(name));
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(ToAsciiGrid(LoadAscii(text.str())), text.str()) << name;
  }
}

TEST(OccupancyGridTest, RejectsInconsistentDimensions) {
  EXPECT_THROW(OccupancyGrid(2, 2, 1.0, {}, std::vector<CellState>(3)),
               MalformedMap);
  EXPECT_THROW(OccupancyGrid(2, 2, 0.0, {}, std::vector<CellState>(4)),
               MalformedMap);
}

TEST(OccupancyGridTest, WorldCellMappingIsABijection) {
  const OccupancyGrid grid = OccupancyGrid::Filled(
      17, 11, 0.1, CellState::kFree, Vec2{-3.0, 2.5});
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      const CellIndex cell{x, y};
      ASSERT_EQ(grid.WorldToCell(grid.CellCenter(cell)), cell);
      ASSERT_EQ(grid.FromIndex(grid.Index(cell)), cell);
    }
  }
}

TEST(OccupancyGridTest, OutOfBoundsReadsAsOccupied) {
  const OccupancyGrid grid = OccupancyGrid::Filled(2, 2, 1.0, CellState::kFree);
  EXPECT_FALSE(grid.IsFree({-1, 0}));
  EXPECT_FALSE(grid.IsFree({0, 2}));
  EXPECT_TRUE(grid.IsFree({1, 1}));
}

TEST(TraversabilityTest, OpenSpace) {
  const OccupancyGrid grid =
      OccupancyGrid::Filled(100, 100, 0.1, CellState::kFree);
  EXPECT_TRUE(IsTraversable(grid, {5.0, 5.0}, 0.3));
}

TEST(TraversabilityTest, NearObstacle) {
  OccupancyGrid grid = OccupancyGrid::Filled(100, 100, 0.1, CellState::kFree);
  grid.Set({52, 50}, CellState::kOccupied);  // spans x in [5.2, 5.3]
  EXPECT_FALSE(IsTraversable(grid, {5.0, 5.05}, 0.3));
  EXPECT_FALSE(IsTraversable(grid, {4.9, 5.05}, 0.3));  // touching counts
  EXPECT_TRUE(IsTraversable(grid, {4.85, 5.05}, 0.3));
}

TEST(TraversabilityTest, UnknownBlocks) {
  OccupancyGrid grid = OccupancyGrid::Filled(100, 100, 0.1, CellState::kFree);
  grid.Set({50, 50}, CellState::kUnknown);
  EXPECT_FALSE(IsTraversable(grid, {5.05, 5.05}, 0.3));
}

TEST(TraversabilityTest, DiscsOverTheBorderAreBlocked) {
  const OccupancyGrid grid =
      OccupancyGrid::Filled(100, 100, 0.1, CellState::kFree);
  EXPECT_FALSE(IsTraversable(grid, {0.2, 5.0}, 0.3));
  EXPECT_FALSE(IsTraversable(grid, {5.0, 9.7}, 0.3));
  EXPECT_TRUE(IsTraversable(grid, {0.31, 5.0}, 0.3));
}

TEST(TraversabilityTest, MatchesPerCellOracleOnFixture) {
  const OccupancyGrid grid = testing::LoadFixture("clutter.grid");
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> x(-0.5, 14.5);
  std::uniform_real_distribution<double> y(-0.5, 10.5);
  std::uniform_real_distribution<double> r(0.05, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Vec2 p{x(rng), y(rng)};
    const double radius = r(rng);
    ASSERT_EQ(IsTraversable(grid, p, radius),
              oracle::DiscIsFree(grid, p, radius))
        << p.x << ", " << p.y << " r=" << radius;
  }
}

}  // namespace
}  // namespace gapnav
