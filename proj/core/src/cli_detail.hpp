// Copyright 2026 The lcexact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCEXACT_SRC_CLI_DETAIL_HPP
#define LCEXACT_SRC_CLI_DETAIL_HPP

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "lcexact/cli_io.hpp"

namespace lcexact::cli::detail {

inline std::filesystem::path out_dir(const RunConfig& c, const RunOptions& o) {
  return o.out_dir.empty() ? std::filesystem::path(c.outputs.directory)
                           : std::filesystem::path(o.out_dir);
}

inline bool wants(const RunConfig& c, const char* format) {
  return std::find(c.outputs.formats.begin(), c.outputs.formats.end(), format) !=
         c.outputs.formats.end();
}

/// Writes the file in binary mode and records it in result.files.
void write_file(const std::filesystem::path& path, const std::string& content,
                RunResult& result);

/// Maps the exception in flight to an exit code and message.
RunResult fail_from_current_exception(RunResult result);

/// curve.svg and diagnostics.svg from fields.csv and diagnostics.csv in dir.
void write_plots(const RunConfig& c, const std::filesystem::path& dir, RunResult& result);

}  // namespace lcexact::cli::detail

#endif  // LCEXACT_SRC_CLI_DETAIL_HPP
