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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "gapnav/lidar.h"
#include "gapnav/safe_heading.h"

namespace gapnav {
namespace {

// Semicircular scans with a few blocked clusters each.
std::vector<Scan> SyntheticScans(int count) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> start(0, 180);
  std::uniform_int_distribution<int> length(1, 40);
  std::uniform_real_distribution<double> range(0.4, 4.9);
  std::vector<Scan> scans;
  for (int n = 0; n < count; ++n) {
    Scan scan;
    scan.max_range_m = 5.0;
    scan.angular_step_deg = 1.0;
    for (int b = -90; b <= 90; ++b) scan.rays.push_back({double(b), kClear});
    for (int c = 0; c < 4; ++c) {
      const int s = start(rng);
      const double r = range(rng);
      for (int i = s; i <= std::min(180, s + length(rng)); ++i) {
        scan.rays[i].range_m = r;
      }
    }
    scans.push_back(std::move(scan));
  }
  return scans;
}

void BM_ExtractAndSelect(benchmark::State& state) {
  const std::vector<Scan> scans = SyntheticScans(256);
  const auto policy = static_cast<HeadingPolicy>(state.range(0));
  const GapParams params{0.3, 2.5, 2.8, policy};
  std::size_t i = 0;
  for (auto _ : state) {
    const GapSet gaps = ExtractGaps(scans[i++ % scans.size()], params);
    benchmark::DoNotOptimize(SelectHeading(gaps, policy));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ExtractAndSelect)
    ->Arg(static_cast<int>(HeadingPolicy::kWidest))
    ->Arg(static_cast<int>(HeadingPolicy::kPaperMin))
    ->Arg(static_cast<int>(HeadingPolicy::kFirstSafe));

}  // namespace
}  // namespace gapnav
