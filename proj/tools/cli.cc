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

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gapnav/episode.h"
#include "gapnav/map_io.h"
#include "gapnav/output_files.h"
#include "gapnav/render.h"
#include "gapnav/trace_io.h"

namespace gapnav::cli {
namespace {

// Raised for flag values that parse but make no sense together.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<double> ParseDouble(std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::optional<Pose> ParseStart(std::string_view text) {
  double parts[3];
  for (int i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',');
    if ((i < 2) == (comma == std::string_view::npos)) return std::nullopt;
    const auto value = ParseDouble(text.substr(0, comma));
    if (!value) return std::nullopt;
    parts[i] = *value;
    text = i < 2 ? text.substr(comma + 1) : std::string_view();
  }
  return MakePose(parts[0], parts[1], parts[2]);
}

// "3", "0-9" or "1,4,7".
std::optional<std::vector<std::uint64_t>> ParseSeeds(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  auto parse_int = [](std::string_view s) -> std::optional<std::uint64_t> {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
  };
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view()
                                           : text.substr(comma + 1);
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      const auto seed = parse_int(item);
      if (!seed) return std::nullopt;
      seeds.push_back(*seed);
      continue;
    }
    const auto lo = parse_int(item.substr(0, dash));
    const auto hi = parse_int(item.substr(dash + 1));
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    for (std::uint64_t s = *lo; s <= *hi; ++s) seeds.push_back(s);
  }
  if (seeds.empty()) return std::nullopt;
  return seeds;
}

CLI::Validator StartValidator() {
  return CLI::Validator(
      [](std::string& text) -> std::string {
        return ParseStart(text) ? "" : "expected X,Y,THETA_DEG, got " + text;
      },
      "X,Y,THETA_DEG");
}

// Flags shared by `run` and `batch`. Unset optionals keep the defaults that
// follow from the sensor range.
struct EpisodeFlags {
  double lidar_range_m = 5.0;
  std::optional<double> d_tilde_m;
  std::optional<double> radius_m;
  std::optional<double> a_r_cos;
  std::optional<std::string> window;
  std::string policy = "widest";
  std::string strategy = "gap";
  double noise_sigma_m = 0.0;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> max_waypoints;
  double angular_step_deg = 1.0;
  double pgm_resolution_m = kDefaultPgmResolution;

  void Register(CLI::App& app) {
    app.add_option("--lidar-range-m", lidar_range_m, "Sensor range l (m)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--d-tilde-m", d_tilde_m,
                   "Waypoint step (m); default l / 2");
    app.add_option("--radius-m", radius_m, "Robot radius r (m); default 0.3");
    app.add_option("--a-r-cos", a_r_cos,
                   "Orientation similarity threshold, cosine; default cos 30");
    app.add_option("--window-L", window,
                   "Half-planes retained, N or 'all'; default 3");
    app.add_option("--policy", policy, "Gap ranking")
        ->capture_default_str()
        ->check(CLI::IsMember({"widest", "paper-min", "first-safe"}));
    app.add_option("--strategy", strategy, "Exploration strategy")
        ->capture_default_str()
        ->check(CLI::IsMember({"gap", "frontier"}));
    app.add_option("--noise-sigma-m", noise_sigma_m,
                   "Gaussian range noise (m)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "Noise seed")->capture_default_str();
    app.add_option("--max-waypoints", max_waypoints,
                   "Waypoint budget; default 400");
    app.add_option("--angular-step-deg", angular_step_deg,
                   "Angle between LiDAR rays (deg)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--pgm-resolution-m", pgm_resolution_m,
                   "Cell size for .pgm maps (m)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  }

  // Throws UsageError or std::invalid_argument.
  EpisodeConfig ToConfig() const {
    EpisodeConfig config;
    config.planner = PlannerConfig::ForRange(lidar_range_m);
    if (d_tilde_m) config.planner.d_tilde_m = *d_tilde_m;
    if (radius_m) config.planner.robot_radius_m = *radius_m;
    config.planner.DeriveDefaults();
    if (a_r_cos) config.planner.a_r_cos = *a_r_cos;
    if (window) {
      if (*window == "all") {
        config.planner.window = kUnboundedWindow;
      } else {
        std::size_t n = 0;
        const char* end = window->data() + window->size();
        const auto [ptr, ec] = std::from_chars(window->data(), end, n);
        if (ec != std::errc() || ptr != end || n == 0) {
          throw UsageError("--window-L: expected a positive integer or "
                           "'all', got " + *window);
        }
        config.planner.window = n;
      }
    }
    config.planner.policy = *ParseHeadingPolicy(policy);
    if (max_waypoints) config.planner.max_waypoints = *max_waypoints;
    config.planner.Validate();
    config.strategy = *ParseStrategy(strategy);
    config.noise_sigma_m = noise_sigma_m;
    config.seed = seed;
    config.angular_step_deg = angular_step_deg;
    config.pgm_resolution_m = pgm_resolution_m;
    return config;
  }
};

void AddConfigFile(CLI::App& app) {
  // Consumed by ExpandConfigFile before parsing; declared for --help.
  app.add_option("--config", "key=value file of flags; flags override it")
      ->type_name("PATH");
}

std::string Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

// Rewrites `gapnav SUB ... --config FILE ...` into `gapnav SUB <file flags>
// ...`. Each "key = value" line becomes "--key value" ('_' in keys reads as
// '-'); blank lines and '#' comments are skipped. File keys also given as
// flags are dropped, so flags win.
std::vector<std::string> ExpandConfigFile(std::vector<std::string> args) {
  std::vector<std::string> rest;
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 == args.size()) throw UsageError("--config: missing path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path || rest.size() < 2) return args;

  std::vector<std::string> given;
  for (const std::string& arg : rest) {
    if (arg.rfind("--", 0) == 0) given.push_back(arg.substr(0, arg.find('=')));
  }
  std::ifstream in(*path);
  if (!in) throw UsageError("--config: cannot open " + *path);
  std::vector<std::string> from_file;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    const std::string content = Trim(line.substr(0, line.find('#')));
    if (content.empty()) continue;
    const std::size_t eq = content.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--config: " + *path + ":" + std::to_string(number) +
                       ": expected key=value");
    }
    std::string key = Trim(std::string_view(content).substr(0, eq));
    std::string value = Trim(std::string_view(content).substr(eq + 1));
    std::replace(key.begin(), key.end(), '_', '-');
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    const std::string flag = "--" + key;
    if (std::find(given.begin(), given.end(), flag) != given.end()) continue;
    from_file.push_back(flag);
    from_file.push_back(value);
  }
  // Program name and subcommand, then the file, then the remaining flags.
  std::vector<std::string> expanded(rest.begin(), rest.begin() + 2);
  expanded.insert(expanded.end(), from_file.begin(), from_file.end());
  expanded.insert(expanded.end(), rest.begin() + 2, rest.end());
  return expanded;
}

void PrintSummary(const EpisodeReport& report, std::ostream& out) {
  out << std::fixed << std::setprecision(3)
      << "strategy: " << ToString(report.strategy) << '\n'
      << "waypoints: " << report.waypoint_count << '\n'
      << "path_length_m: " << report.path_length_m << '\n'
      << "final_coverage: " << report.final_coverage() << '\n'
      << "reverse_count: " << report.reverse_count << '\n'
      << "halt_reason: " << ToString(report.halt_reason) << '\n'
      << "wall_clock_s: " << report.wall_clock_s << '\n'
      << std::defaultfloat;
}

int ExitCodeFor(const EpisodeReport& report) {
  return report.halt_reason == HaltReason::kNoSafeHeading ? kExitDeadEnd
                                                          : kExitOk;
}

struct RunCommand {
  EpisodeFlags flags;
  std::string map;
  std::string start;
  std::string trace_out, report_out, render_out;

  void Register(CLI::App& app) {
    AddConfigFile(app);
    app.add_option("--map", map, "Map file (.grid or .pgm)")->required();
    app.add_option("--start", start, "Start pose")
        ->required()
        ->check(StartValidator());
    flags.Register(app);
    app.add_option("--trace-out", trace_out, "Trace CSV path");
    app.add_option("--report-out", report_out, "Report path");
    app.add_option("--render-out", render_out, "PPM render path");
  }

  int Execute(std::ostream& out, std::stop_token stop) const {
    EpisodeConfig config = flags.ToConfig();
    config.map_path = map;
    config.start = *ParseStart(start);
    config.outputs = {trace_out, report_out, render_out};
    const EpisodeResult result = RunConfigured(config, stop);
    PrintSummary(result.report, out);
    return ExitCodeFor(result.report);
  }
};

struct BatchCommand {
  EpisodeFlags flags;
  std::vector<std::string> maps;
  std::vector<std::string> starts;
  std::string seeds = "0";
  std::string out_dir;
  unsigned jobs = 0;

  void Register(CLI::App& app) {
    AddConfigFile(app);
    app.add_option("--maps", maps, "Map files, comma separated")
        ->required()
        ->delimiter(',');
    app.add_option("--start", starts,
                   "Start pose; once for all maps or once per map")
        ->required()
        ->check(StartValidator());
    app.add_option("--seeds", seeds, "Seeds: N, A-B or a comma list")
        ->capture_default_str();
    app.add_option("--out-dir", out_dir, "Directory for per-episode files")
        ->required();
    app.add_option("--jobs", jobs, "Worker threads; 0 for one per core")
        ->capture_default_str();
    flags.Register(app);
  }

  struct Job {
    EpisodeConfig config;
    std::string name;
  };

  struct Outcome {
    std::optional<EpisodeReport> report;
    std::string error;
  };

  int Execute(std::ostream& out, std::ostream& err,
              std::stop_token stop) const {
    if (starts.size() != 1 && starts.size() != maps.size()) {
      throw UsageError("--start: give one pose, or one per map (" +
                       std::to_string(maps.size()) + ")");
    }
    const auto seed_list = ParseSeeds(seeds);
    if (!seed_list) throw UsageError("--seeds: cannot parse " + seeds);
    const EpisodeConfig base = flags.ToConfig();
    std::filesystem::create_directories(out_dir);

    std::vector<Job> plan;
    for (std::size_t m = 0; m < maps.size(); ++m) {
      for (std::uint64_t seed : *seed_list) {
        Job job{base, ""};
        job.config.map_path = maps[m];
        job.config.start = *ParseStart(starts.size() == 1 ? starts[0]
                                                          : starts[m]);
        job.config.seed = seed;
        job.name = std::filesystem::path(maps[m]).stem().string() + "_seed" +
                   std::to_string(seed);
        const std::filesystem::path stem =
            std::filesystem::path(out_dir) / job.name;
        job.config.outputs = {stem.string() + ".trace.csv",
                              stem.string() + ".report.txt",
                              stem.string() + ".ppm"};
        plan.push_back(std::move(job));
      }
    }

    // Workers claim episodes in order; each episode owns its output files.
    std::vector<Outcome> outcomes(plan.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < plan.size(); i = next++) {
        try {
          outcomes[i].report = RunConfigured(plan[i].config, stop).report;
        } catch (const std::exception& e) {
          outcomes[i].error = e.what();
        }
      }
    };
    const unsigned threads = std::clamp<unsigned>(
        jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs,
        1u, static_cast<unsigned>(std::max<std::size_t>(1, plan.size())));
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    int code = kExitOk;
    for (std::size_t i = 0; i < plan.size(); ++i) {
      const Outcome& outcome = outcomes[i];
      if (!outcome.report) {
        err << plan[i].name << ": " << outcome.error << '\n';
        code = kExitUsage;
        continue;
      }
      out << plan[i].name << std::fixed << std::setprecision(3)
          << " coverage=" << outcome.report->final_coverage()
          << " waypoints=" << outcome.report->waypoint_count
          << " reverses=" << outcome.report->reverse_count
          << " halt=" << ToString(outcome.report->halt_reason)
          << std::defaultfloat << '\n';
      if (code == kExitOk) code = ExitCodeFor(*outcome.report);
    }
    return code;
  }
};

struct RenderCommand {
  std::string map, trace, out_path;
  double lidar_range_m = 5.0;
  double angular_step_deg = 1.0;
  double pgm_resolution_m = kDefaultPgmResolution;
  int pixels_per_cell = RenderOptions{}.pixels_per_cell;

  void Register(CLI::App& app) {
    AddConfigFile(app);
    app.add_option("--map", map, "Map file")->required();
    app.add_option("--trace", trace, "Trace CSV from a run")->required();
    app.add_option("--out", out_path, "PPM output path")->required();
    app.add_option("--lidar-range-m", lidar_range_m,
                   "Sensor range used to replay coverage (m)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--angular-step-deg", angular_step_deg,
                   "Angle between LiDAR rays (deg)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--pgm-resolution-m", pgm_resolution_m,
                   "Cell size for .pgm maps (m)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--pixels-per-cell", pixels_per_cell, "Image scale")
        ->capture_default_str()
        ->check(CLI::Range(1, 64));
  }

  int Execute(std::ostream& out) const {
    const OccupancyGrid grid = LoadMapFile(map, pgm_resolution_m);
    std::ifstream in(trace);
    if (!in) throw std::runtime_error("cannot open trace " + trace);
    const std::vector<TraceRow> rows = ReadTraceCsv(in);
    const CoverageLedger ledger =
        ReplayCoverage(grid, rows, {lidar_range_m, angular_step_deg});
    WriteFileAtomically(out_path,
                        RenderEpisode(grid, ledger, rows, {pixels_per_cell}));
    out << "wrote " << out_path << '\n';
    return kExitOk;
  }
};

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err, std::stop_token stop,
         const SelfcheckHooks& hooks) {
  CLI::App app("Gap-based safe-heading exploration in a simulated grid world",
               "gapnav");
  app.require_subcommand(1);
  app.set_version_flag("--version", "gapnav 0.1.0");

  RunCommand run;
  run.Register(*app.add_subcommand("run", "Run one episode"));
  BatchCommand batch;
  CLI::App* batch_app =
      app.add_subcommand("batch", "Run every map x seed pair");
  batch.Register(*batch_app);
  RenderCommand render;
  render.Register(
      *app.add_subcommand("render", "Render a recorded trace to PPM"));
  app.add_subcommand("selfcheck", "Compare against the reference oracles");

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = ExpandConfigFile(std::move(args));
    // CLI11 consumes the reversed list from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(std::move(reversed));
  } catch (const UsageError& e) {
    err << "gapnav: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Success& e) {
    // --help and --version.
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "gapnav: " << e.what() << '\n'
        << "Run with --help for usage.\n";
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "run") return run.Execute(out, stop);
    if (command == "batch") return batch.Execute(out, err, stop);
    if (command == "render") return render.Execute(out);
    return ReportSelfchecks(RunSelfchecks(hooks), out);
  } catch (const std::exception& e) {
    err << "gapnav " << command << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gapnav::cli
