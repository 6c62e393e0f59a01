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

#ifndef GAPNAV_TOOLS_CLI_H_
#define GAPNAV_TOOLS_CLI_H_

#include <iosfwd>
#include <stop_token>

#include "selfcheck.h"

namespace gapnav::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;      // bad flags, unreadable input, I/O
inline constexpr int kExitDeadEnd = 2;    // halted with no safe heading
inline constexpr int kExitSelfcheck = 3;  // a self-check disagreed

// Entry point for `gapnav <subcommand> [flags]`. Results go to `out`,
// diagnostics to `err`. Episodes stop early once `stop` is requested.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err, std::stop_token stop = {},
         const SelfcheckHooks& hooks = {});

}  // namespace gapnav::cli

#endif  // GAPNAV_TOOLS_CLI_H_
