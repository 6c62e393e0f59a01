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

#include "gapnav/episode.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stop_token>
#include <string>

#include "gapnav/oracles.h"
#include "gapnav/output_files.h"
#include "gapnav/trace_io.h"
#include "gtest/gtest.h"
#include "test_maps.h"

namespace gapnav {
namespace {

EpisodeConfig DefaultConfig(const Pose& start) {
  EpisodeConfig config;
  config.planner = PlannerConfig::ForRange(5.0);
  config.start = start;
  return config;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

class ScratchDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("gapnav_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::filesystem::path dir_;
};

TEST(EpisodeTest, OpenMapRunsStraightUntilTheBoundaryComesIntoView) {
  const OccupancyGrid grid = testing::LoadFixture("empty.grid");
  EpisodeConfig config = DefaultConfig(MakePose(10, 10, 0));
  config.planner.max_waypoints = 20;
  const EpisodeResult result = SimulateEpisode(grid, config);
  // The first waypoints see nothing within the threshold.
  ASSERT_GE(result.waypoints.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(result.waypoints[i].theta_deg, 0.0);
    EXPECT_EQ(result.waypoints[i].y, 10.0);
    EXPECT_EQ(result.waypoints[i].x, 10.0 + 2.5 * i);
  }
}

TEST(EpisodeTest, DeadEndCorridorReversesAndLeaves) {
  const OccupancyGrid grid = testing::LoadFixture("corridor.grid");
  EpisodeConfig config = DefaultConfig(MakePose(10, 4, 0));
  config.planner.max_waypoints = 12;
  const EpisodeResult result = SimulateEpisode(grid, config);
  EXPECT_GE(result.report.reverse_count, 1);
  EXPECT_LT(result.waypoints.back().x, 7.0);
}

TEST(EpisodeTest, ApartmentCoverageWithinBudget) {
  const OccupancyGrid grid = testing::LoadFixture("apartment.grid");
  const EpisodeResult result =
      SimulateEpisode(grid, DefaultConfig(MakePose(2, 2, 90)));
  EXPECT_GE(result.report.final_coverage(), 0.90);
  EXPECT_LE(result.report.waypoint_count, 400);
}

TEST(EpisodeTest, ReportIsConsistentWithTheRun) {
  const OccupancyGrid grid = testing::LoadFixture("clutter.grid");
  EpisodeConfig config = DefaultConfig(MakePose(2, 5, 0));
  config.planner.max_waypoints = 120;
  config.noise_sigma_m = 0.02;
  config.seed = 3;
  const EpisodeResult result = SimulateEpisode(grid, config);
  const EpisodeReport& report = result.report;
  EXPECT_EQ(report.waypoint_count, 120);
  EXPECT_EQ(report.halt_reason, HaltReason::kMaxWaypoints);
  ASSERT_EQ(report.coverage_series.size(),
            static_cast<std::size_t>(report.waypoint_count));
  for (std::size_t i = 1; i < report.coverage_series.size(); ++i) {
    ASSERT_GE(report.coverage_series[i], report.coverage_series[i - 1]);
  }
  double length = 0.0, waypoint_distance = 0.0;
  std::int64_t reverses = 0;
  for (const MotionSegment& segment : result.segments) length += segment.length_m;
  for (std::size_t i = 1; i < result.waypoints.size(); ++i) {
    waypoint_distance += Distance(result.waypoints[i - 1].position(),
                                  result.waypoints[i].position());
  }
  for (const TraceRow& row : result.trace) {
    reverses += row.kind == TraceKind::kReverse;
  }
  EXPECT_DOUBLE_EQ(report.path_length_m, length);
  EXPECT_NEAR(report.path_length_m, waypoint_distance, 1e-9);
  EXPECT_EQ(report.reverse_count, reverses);
  EXPECT_LE(report.path_length_to_final_coverage_m, report.path_length_m);
}

TEST(EpisodeTest, EveryWaypointIsTraversable) {
  const OccupancyGrid grid = testing::LoadFixture("room_door.grid");
  const EpisodeResult result =
      SimulateEpisode(grid, DefaultConfig(MakePose(5, 5, 0)));
  for (const Pose& pose : result.waypoints) {
    ASSERT_TRUE(oracle::DiscIsFree(grid, pose.position(), 0.3));
  }
}

TEST(EpisodeTest, LedgerMatchesReplayedCoverage) {
  const OccupancyGrid grid = testing::LoadFixture("bend.grid");
  EpisodeConfig config = DefaultConfig(MakePose(1.0, 1.8, 0));
  config.planner.max_waypoints = 30;
  const EpisodeResult result = SimulateEpisode(grid, config);
  const CoverageLedger replayed =
      ReplayCoverage(grid, result.trace, config.lidar());
  ASSERT_EQ(replayed.seen_count(), result.ledger.seen_count());
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    ASSERT_EQ(replayed.IsSeen(i), result.ledger.IsSeen(i));
  }
}

TEST(EpisodeTest, StopRequestHaltsBeforeTheFirstMove) {
  const OccupancyGrid grid = testing::LoadFixture("empty.grid");
  std::stop_source source;
  source.request_stop();
  const EpisodeResult result = SimulateEpisode(
      grid, DefaultConfig(MakePose(10, 10, 0)), source.get_token());
  EXPECT_EQ(result.report.halt_reason, HaltReason::kUserStop);
  EXPECT_EQ(result.report.waypoint_count, 1);
  EXPECT_GT(result.report.final_coverage(), 0.0);
}

TEST(EpisodeTest, BoxedInRobotHaltsWithNoSafeHeading) {
  const OccupancyGrid grid = testing::WalledBox(12, 12, 0.1);
  const EpisodeResult result =
      SimulateEpisode(grid, DefaultConfig(MakePose(0.6, 0.6, 0)));
  EXPECT_EQ(result.report.halt_reason, HaltReason::kNoSafeHeading);
  EXPECT_EQ(result.report.waypoint_count, 1);
  ASSERT_EQ(result.trace.size(), 1u);
  EXPECT_EQ(result.trace[0].kind, TraceKind::kHalt);
}

TEST(EpisodeTest, RejectsBadStartPoses) {
  const OccupancyGrid grid = testing::LoadFixture("single_room.grid");
  EXPECT_THROW(SimulateEpisode(grid, DefaultConfig(MakePose(0.3, 4, 0))),
               EpisodeError);
  EXPECT_THROW(SimulateEpisode(grid, DefaultConfig(MakePose(-1, 4, 0))),
               ScanError);
  EpisodeConfig bad = DefaultConfig(MakePose(5, 4, 0));
  bad.planner.window = 0;
  EXPECT_THROW(SimulateEpisode(grid, bad), std::invalid_argument);
}

TEST(EpisodeTest, SameSeedSameRunDifferentSeedDifferentRun) {
  const OccupancyGrid grid = testing::LoadFixture("clutter.grid");
  EpisodeConfig config = DefaultConfig(MakePose(2, 5, 0));
  config.planner.max_waypoints = 80;
  config.noise_sigma_m = 0.2;
  const auto trace_of = [&](std::uint64_t seed) {
    config.seed = seed;
    std::ostringstream out;
    WriteTraceCsv(SimulateEpisode(grid, config).trace, out);
    return out.str();
  };
  EXPECT_EQ(trace_of(1), trace_of(1));
  EXPECT_NE(trace_of(1), trace_of(2));
}

TEST(ReportTest, PlainTextLayout) {
  EpisodeReport report;
  report.waypoint_count = 3;
  report.path_length_m = 5.0;
  report.path_length_to_final_coverage_m = 2.5;
  report.coverage_series = {0.25, 0.5, 0.625};
  report.reverse_count = 1;
  report.halt_reason = HaltReason::kNoSafeHeading;
  report.wall_clock_s = 12.0;
  EXPECT_EQ(ReportToString(report),
            "strategy: gap\n"
            "waypoint_count: 3\n"
            "path_length_m: 5\n"
            "path_length_to_final_coverage_m: 2.5\n"
            "final_coverage: 0.625\n"
            "reverse_count: 1\n"
            "halt_reason: NoSafeHeading\n"
            "coverage_series: 0.25,0.5,0.625\n");
}

TEST(ReportTest, FrozenApartmentReference) {
  const OccupancyGrid grid = testing::LoadFixture("apartment.grid");
  const EpisodeReport report =
      SimulateEpisode(grid, DefaultConfig(MakePose(2, 2, 90))).report;
  EXPECT_EQ(report.waypoint_count, 400);
  EXPECT_EQ(report.path_length_m, 997.5);
  EXPECT_EQ(report.path_length_to_final_coverage_m, 552.5);
  EXPECT_EQ(report.final_coverage(), 1.0);
  EXPECT_EQ(report.reverse_count, 54);
  EXPECT_EQ(report.halt_reason, HaltReason::kMaxWaypoints);
}

TEST(ReportTest, NamesRoundTrip) {
  EXPECT_EQ(ParseStrategy("gap"), Strategy::kGap);
  EXPECT_EQ(ParseStrategy(ToString(Strategy::kFrontier)), Strategy::kFrontier);
  EXPECT_FALSE(ParseStrategy("random").has_value());
  EXPECT_EQ(ToString(HaltReason::kUserStop), "UserStop");
  EXPECT_EQ(ToString(HaltReason::kNoFrontiers), "NoFrontiers");
}

TEST(TraceCsvTest, RoundTrip) {
  const std::vector<TraceRow> rows = {
      {0, MakePose(1.5, 2.25, 90), TraceKind::kAdvance},
      {0, MakePose(1.5, 2.35, 90), TraceKind::kSample},
      {1, MakePose(1.5, 4.75, 270), TraceKind::kReverse},
      {2, MakePose(0.1, 1.0 / 3.0, 359.5), TraceKind::kHalt}};
  std::ostringstream out;
  WriteTraceCsv(rows, out);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')),
            "k,x,y,theta_deg,decision");
  std::istringstream in(out.str());
  const std::vector<TraceRow> read = ReadTraceCsv(in);
  ASSERT_EQ(read.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(read[i].k, rows[i].k);
    EXPECT_EQ(read[i].pose, rows[i].pose);
    EXPECT_EQ(read[i].kind, rows[i].kind);
  }
}

TEST(TraceCsvTest, RejectsMalformedRows) {
  std::istringstream no_header("0,1,2,3,ADVANCE\n");
  EXPECT_THROW(ReadTraceCsv(no_header), std::runtime_error);
  std::istringstream bad_kind("k,x,y,theta_deg,decision\n0,1,2,3,JUMP\n");
  EXPECT_THROW(ReadTraceCsv(bad_kind), std::runtime_error);
  std::istringstream short_row("k,x,y,theta_deg,decision\n0,1,2,ADVANCE\n");
  EXPECT_THROW(ReadTraceCsv(short_row), std::runtime_error);
  std::istringstream bad_number("k,x,y,theta_deg,decision\n0,1,zz,3,HALT\n");
  EXPECT_THROW(ReadTraceCsv(bad_number), std::runtime_error);
}

TEST_F(ScratchDir, RunWritesEveryOutputWithoutLeftovers) {
  EpisodeConfig config = DefaultConfig(MakePose(2, 2, 90));
  config.map_path = testing::FixturePath("single_room.grid");
  config.planner.max_waypoints = 30;
  config.outputs = {dir_ / "t.csv", dir_ / "sub" / "r.txt", dir_ / "m.ppm"};
  const EpisodeResult result = RunConfigured(config);
  EXPECT_EQ(ReadFile(dir_ / "sub" / "r.txt"), ReportToString(result.report));
  std::ostringstream trace;
  WriteTraceCsv(result.trace, trace);
  EXPECT_EQ(ReadFile(dir_ / "t.csv"), trace.str());
  EXPECT_EQ(ReadFile(dir_ / "m.ppm").substr(0, 2), "P6");
  int files = 0;
  for (const auto& entry :
       std::filesystem::recursive_directory_iterator(dir_)) {
    files += entry.is_regular_file();
    EXPECT_NE(entry.path().extension(), ".partial");
  }
  EXPECT_EQ(files, 3);
}

TEST_F(ScratchDir, RunEpisodeAndBaselineForceTheirStrategy) {
  EpisodeConfig config = DefaultConfig(MakePose(2, 2, 90));
  config.map_path = testing::FixturePath("single_room.grid");
  config.planner.max_waypoints = 30;
  config.strategy = Strategy::kFrontier;
  EXPECT_EQ(RunEpisode(config).strategy, Strategy::kGap);
  config.strategy = Strategy::kGap;
  EXPECT_EQ(RunFrontierBaseline(config).strategy, Strategy::kFrontier);
}

TEST_F(ScratchDir, MissingMapIsAnError) {
  EpisodeConfig config = DefaultConfig(MakePose(2, 2, 90));
  config.map_path = dir_ / "absent.grid";
  EXPECT_THROW(RunConfigured(config), std::runtime_error);
}

TEST_F(ScratchDir, AtomicWriteReplacesWholeFiles) {
  const auto path = dir_ / "out.txt";
  WriteFileAtomically(path, "first version, longer");
  WriteFileAtomically(path, "second");
  EXPECT_EQ(ReadFile(path), "second");
  EXPECT_FALSE(std::filesystem::exists(dir_ / "out.txt.partial"));
  EXPECT_THROW(WriteFileAtomically(dir_ / "out.txt" / "x", "y"),
               std::exception);
}

}  // namespace
}  // namespace gapnav
