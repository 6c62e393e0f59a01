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

#ifndef GAPNAV_OUTPUT_FILES_H_
#define GAPNAV_OUTPUT_FILES_H_

#include <filesystem>
#include <string_view>

namespace gapnav {

// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partial file. Throws std::runtime_error on I/O failure.
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view contents);

}  // namespace gapnav

#endif  // GAPNAV_OUTPUT_FILES_H_
