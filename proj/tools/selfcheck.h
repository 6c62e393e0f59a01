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

#ifndef GAPNAV_TOOLS_SELFCHECK_H_
#define GAPNAV_TOOLS_SELFCHECK_H_

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gapnav/lidar.h"
#include "gapnav/safe_heading.h"

namespace gapnav::cli {

// Seams for fault injection: tests swap in a broken implementation to prove
// that the corresponding check notices.
struct SelfcheckHooks {
  // Gap grouping under test; FindGapCandidates when empty.
  std::function<std::vector<Gap>(const Scan&, const GapParams&)> find_gaps;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Compares the production raycast and gap grouping against the slow oracles
// on generated inputs, and checks that an obstacle-free run goes straight.
// Deterministic.
std::vector<CheckResult> RunSelfchecks(const SelfcheckHooks& hooks = {});

// Prints one line per check; returns 0 if all passed, 3 otherwise.
int ReportSelfchecks(const std::vector<CheckResult>& results,
                     std::ostream& out);

}  // namespace gapnav::cli

#endif  // GAPNAV_TOOLS_SELFCHECK_H_
