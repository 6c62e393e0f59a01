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

#ifndef GAPNAV_TRACE_IO_H_
#define GAPNAV_TRACE_IO_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "gapnav/geometry.h"

namespace gapnav {

enum class TraceKind { kAdvance, kReverse, kHalt, kSample };

struct TraceRow {
  std::int64_t k = 0;
  Pose pose;
  TraceKind kind = TraceKind::kAdvance;
};

std::string_view ToString(TraceKind kind);

// CSV with header "k,x,y,theta_deg,decision". Waypoint rows carry ADVANCE,
// REVERSE or HALT; motion samples between waypoint k and k+1 follow as
// "sample" rows tagged with k.
void WriteTraceCsv(std::span<const TraceRow> rows, std::ostream& out);

// Throws std::runtime_error on malformed input.
std::vector<TraceRow> ReadTraceCsv(std::istream& in);

}  // namespace gapnav

#endif  // GAPNAV_TRACE_IO_H_
