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

#include "gapnav/trace_io.h"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "format.h"

namespace gapnav {
namespace {

constexpr std::string_view kTraceHeader = "k,x,y,theta_deg,decision";

template <typename T>
T ParseNumber(std::string_view field, std::size_t line_number) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("trace line " + std::to_string(line_number) +
                             ": bad number '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string_view ToString(TraceKind kind) {
  switch (kind) {
    case TraceKind::kAdvance: return "ADVANCE";
    case TraceKind::kReverse: return "REVERSE";
    case TraceKind::kHalt: return "HALT";
    case TraceKind::kSample: return "sample";
  }
  return "unknown";
}

void WriteTraceCsv(std::span<const TraceRow> rows, std::ostream& out) {
  using internal::FormatDouble;
  out << kTraceHeader << '\n';
  for (const TraceRow& row : rows) {
    out << row.k << ',' << FormatDouble(row.pose.x) << ','
        << FormatDouble(row.pose.y) << ',' << FormatDouble(row.pose.theta_deg)
        << ',' << ToString(row.kind) << '\n';
  }
}

std::vector<TraceRow> ReadTraceCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw std::runtime_error("trace is missing its header row");
  }
  std::vector<TraceRow> rows;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (std::size_t comma; (comma = rest.find(',')) != std::string_view::npos;) {
      fields.push_back(rest.substr(0, comma));
      rest.remove_prefix(comma + 1);
    }
    fields.push_back(rest);
    if (fields.size() != 5) {
      throw std::runtime_error("trace line " + std::to_string(line_number) +
                               ": expected 5 fields");
    }
    TraceRow row;
    row.k = ParseNumber<std::int64_t>(fields[0], line_number);
    row.pose.x = ParseNumber<double>(fields[1], line_number);
    row.pose.y = ParseNumber<double>(fields[2], line_number);
    row.pose.theta_deg = ParseNumber<double>(fields[3], line_number);
    const std::string_view kind = fields[4];
    if (kind == "ADVANCE") {
      row.kind = TraceKind::kAdvance;
    } else if (kind == "REVERSE") {
      row.kind = TraceKind::kReverse;
    } else if (kind == "HALT") {
      row.kind = TraceKind::kHalt;
    } else if (kind == "sample") {
      row.kind = TraceKind::kSample;
    } else {
      throw std::runtime_error("trace line " + std::to_string(line_number) +
                               ": unknown decision '" + std::string(kind) + "'");
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gapnav
