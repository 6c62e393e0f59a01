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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "gapnav/map_io.h"
#include "gapnav/safe_heading.h"
#include "gtest/gtest.h"
#include "test_maps.h"

namespace gapnav::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation Invoke(std::initializer_list<std::string> args,
                  std::stop_token stop = {},
                  const SelfcheckHooks& hooks = {}) {
  std::vector<std::string> storage = {"gapnav"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& arg : storage) argv.push_back(arg.c_str());
  std::ostringstream out, err;
  const int code = Main(static_cast<int>(argv.size()), argv.data(), out, err,
                        stop, hooks);
  return {code, out.str(), err.str()};
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

std::string Fixture(const std::string& name) {
  return testing::FixturePath(name).string();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("gapnav_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, RunOnEmptyMapSucceedsWithAStraightStart) {
  const Invocation run =
      Invoke({"run", "--map", Fixture("empty.grid"), "--start", "10,10,0",
              "--trace-out", Path("t.csv")});
  EXPECT_EQ(run.code, kExitOk) << run.err;
  EXPECT_NE(run.out.find("halt_reason: MaxWaypoints"), std::string::npos);
  EXPECT_NE(run.out.find("wall_clock_s: "), std::string::npos);
  const std::string trace = ReadFile(Path("t.csv"));
  EXPECT_EQ(trace.substr(0, trace.find('\n')), "k,x,y,theta_deg,decision");
  EXPECT_NE(trace.find("\n0,10,10,0,ADVANCE\n"), std::string::npos);
  EXPECT_NE(trace.find("\n1,12.5,10,0,ADVANCE\n"), std::string::npos);
  EXPECT_NE(trace.find("\n2,15,10,0,"), std::string::npos);
}

TEST_F(CliTest, MissingMapIsAUsageError) {
  const Invocation run = Invoke({"run", "--start", "1,1,0"});
  EXPECT_EQ(run.code, kExitUsage);
  EXPECT_NE(run.err.find("--map"), std::string::npos);
}

TEST_F(CliTest, UnknownFlagsAndBadValuesAreUsageErrors) {
  const std::string map = Fixture("empty.grid");
  EXPECT_EQ(Invoke({"run", "--map", map, "--start", "10,10,0", "--speed", "2"})
                .code,
            kExitUsage);
  const Invocation bad_start = Invoke({"run", "--map", map, "--start", "10,10"});
  EXPECT_EQ(bad_start.code, kExitUsage);
  EXPECT_NE(bad_start.err.find("--start"), std::string::npos);
  EXPECT_EQ(Invoke({"run", "--map", map, "--start", "10,10,0", "--policy",
                    "largest"})
                .code,
            kExitUsage);
  EXPECT_EQ(Invoke({"run", "--map", map, "--start", "10,10,0", "--window-L",
                    "0"})
                .code,
            kExitUsage);
  EXPECT_EQ(Invoke({"run", "--map", map, "--start", "10,10,0", "--a-r-cos",
                    "2"})
                .code,
            kExitUsage);
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"fly"}).code, kExitUsage);
}

TEST_F(CliTest, IoErrorsExitOne) {
  EXPECT_EQ(Invoke({"run", "--map", Path("absent.grid"), "--start", "1,1,0"})
                .code,
            kExitUsage);
  EXPECT_EQ(Invoke({"run", "--map", Fixture("single_room.grid"), "--start",
                    "0.1,0.1,0"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, HelpSucceeds) {
  const Invocation help = Invoke({"run", "--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("--d-tilde-m"), std::string::npos);
}

TEST_F(CliTest, RepeatedRunsWriteIdenticalFiles) {
  for (const char* suffix : {"1", "2"}) {
    const std::string s = suffix;
    const Invocation run = Invoke(
        {"run", "--map", Fixture("apartment.grid"), "--start", "2,2,90",
         "--policy", "widest", "--seed", "7", "--noise-sigma-m", "0.02",
         "--trace-out", Path("t" + s), "--report-out", Path("r" + s),
         "--render-out", Path("p" + s)});
    ASSERT_EQ(run.code, kExitOk) << run.err;
  }
  EXPECT_EQ(ReadFile(Path("t1")), ReadFile(Path("t2")));
  EXPECT_EQ(ReadFile(Path("r1")), ReadFile(Path("r2")));
  EXPECT_EQ(ReadFile(Path("p1")), ReadFile(Path("p2")));
  EXPECT_FALSE(ReadFile(Path("t1")).empty());
}

TEST_F(CliTest, DeadEndExitsTwo) {
  std::ofstream(Path("box.grid")) << ToAsciiGrid(testing::WalledBox(12, 12, 0.1));
  const Invocation run =
      Invoke({"run", "--map", Path("box.grid"), "--start", "0.6,0.6,0"});
  EXPECT_EQ(run.code, kExitDeadEnd);
  EXPECT_NE(run.out.find("NoSafeHeading"), std::string::npos);
}

TEST_F(CliTest, StopRequestEndsTheRunCleanly) {
  std::stop_source source;
  source.request_stop();
  const Invocation run =
      Invoke({"run", "--map", Fixture("empty.grid"), "--start", "10,10,0",
              "--report-out", Path("r.txt")},
             source.get_token());
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_NE(ReadFile(Path("r.txt")).find("halt_reason: UserStop"),
            std::string::npos);
}

TEST_F(CliTest, ConfigFileValuesYieldToFlags) {
  std::ofstream(Path("c.ini"))
      << "# episode\nmap = " << Fixture("corridor.grid")
      << "\nstart = \"10,4,0\"\nmax_waypoints = 12\npolicy=first-safe\n";
  const Invocation from_file = Invoke({"run", "--config", Path("c.ini")});
  EXPECT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_NE(from_file.out.find("waypoints: 12\n"), std::string::npos);
  const Invocation overridden = Invoke(
      {"run", "--max-waypoints", "3", "--config=" + Path("c.ini")});
  EXPECT_NE(overridden.out.find("waypoints: 3\n"), std::string::npos);

  std::ofstream(Path("bad.ini")) << "map\n";
  EXPECT_EQ(Invoke({"run", "--config", Path("bad.ini")}).code, kExitUsage);
  std::ofstream(Path("unknown.ini")) << "speed = 3\n";
  EXPECT_EQ(Invoke({"run", "--config", Path("unknown.ini"), "--map",
                    Fixture("corridor.grid"), "--start", "10,4,0"})
                .code,
            kExitUsage);
  EXPECT_EQ(Invoke({"run", "--config", Path("absent.ini")}).code, kExitUsage);
}

TEST_F(CliTest, BatchWritesOneSetOfFilesPerEpisode) {
  const Invocation batch = Invoke(
      {"batch", "--maps", Fixture("corridor.grid") + "," + Fixture("bend.grid"),
       "--start", "10,4,0", "--start", "1,1.8,0", "--seeds", "0-1,5",
       "--noise-sigma-m", "0.05", "--max-waypoints", "25", "--jobs", "3",
       "--out-dir", Path("batch")});
  ASSERT_EQ(batch.code, kExitOk) << batch.err;
  for (const std::string name :
       {"corridor_seed0", "corridor_seed1", "corridor_seed5", "bend_seed0",
        "bend_seed1", "bend_seed5"}) {
    EXPECT_NE(batch.out.find(name + " coverage="), std::string::npos) << name;
    for (const std::string ext : {".trace.csv", ".report.txt", ".ppm"}) {
      EXPECT_TRUE(std::filesystem::exists(dir_ / "batch" / (name + ext)))
          << name << ext;
    }
  }
  // Each episode matches a standalone run with the same seed.
  const Invocation single = Invoke(
      {"run", "--map", Fixture("bend.grid"), "--start", "1,1.8,0", "--seed",
       "5", "--noise-sigma-m", "0.05", "--max-waypoints", "25",
       "--trace-out", Path("single.csv")});
  ASSERT_EQ(single.code, kExitOk);
  EXPECT_EQ(ReadFile(Path("single.csv")),
            ReadFile(dir_ / "batch" / "bend_seed5.trace.csv"));
}

TEST_F(CliTest, BatchRejectsMismatchedStarts) {
  const Invocation batch = Invoke(
      {"batch", "--maps", Fixture("corridor.grid") + "," + Fixture("bend.grid"),
       "--start", "10,4,0", "--start", "1,1.8,0", "--start", "1,1,0",
       "--out-dir", Path("batch")});
  EXPECT_EQ(batch.code, kExitUsage);
  EXPECT_EQ(Invoke({"batch", "--maps", Fixture("corridor.grid"), "--start",
                    "10,4,0", "--seeds", "5-2", "--out-dir", Path("b")})
                .code,
            kExitUsage);
}

TEST_F(CliTest, RenderReplaysARecordedTrace) {
  ASSERT_EQ(Invoke({"run", "--map", Fixture("room_door.grid"), "--start",
                    "5,5,0", "--max-waypoints", "40", "--trace-out",
                    Path("t.csv"), "--render-out", Path("run.ppm")})
                .code,
            kExitOk);
  const Invocation render =
      Invoke({"render", "--map", Fixture("room_door.grid"), "--trace",
              Path("t.csv"), "--out", Path("replay.ppm")});
  ASSERT_EQ(render.code, kExitOk) << render.err;
  EXPECT_EQ(ReadFile(Path("replay.ppm")), ReadFile(Path("run.ppm")));
  EXPECT_EQ(Invoke({"render", "--map", Fixture("room_door.grid"), "--trace",
                    Path("absent.csv"), "--out", Path("x.ppm")})
                .code,
            kExitUsage);
}

TEST(SelfcheckTest, FreshBuildPasses) {
  const Invocation check = Invoke({"selfcheck"});
  EXPECT_EQ(check.code, kExitOk) << check.out;
  EXPECT_NE(check.out.find("PASS raycast-vs-marching-oracle"),
            std::string::npos);
  EXPECT_NE(check.out.find("PASS gaps-vs-per-degree-oracle"),
            std::string::npos);
  EXPECT_NE(check.out.find("PASS obstacle-free-straight-line"),
            std::string::npos);
}

TEST(SelfcheckTest, CorruptedGapGroupingFails) {
  SelfcheckHooks hooks;
  // Off by one at the upper boundary of every gap.
  hooks.find_gaps = [](const Scan& scan, const GapParams& params) {
    std::vector<Gap> gaps = FindGapCandidates(scan, params);
    for (Gap& gap : gaps) gap.hi_bearing_deg -= scan.angular_step_deg;
    return gaps;
  };
  const Invocation check = Invoke({"selfcheck"}, {}, hooks);
  EXPECT_EQ(check.code, kExitSelfcheck);
  EXPECT_NE(check.out.find("FAIL gaps-vs-per-degree-oracle"),
            std::string::npos);
  EXPECT_NE(check.out.find("PASS raycast-vs-marching-oracle"),
            std::string::npos);
}

}  // namespace
}  // namespace gapnav::cli
