// Copyright 2026 The Holesynth Authors. All rights reserved.
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

// Command-line front end: `solve` and `bench`.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "holesynth/sygus.hpp"

namespace holesynth {

enum ExitCode : int { kExitSolved = 0, kExitUnsolved = 1, kExitUsage = 2 };

/// Outcome of one configured run, as reported by `solve --stats` and `bench`.
struct RunReport {
  std::string task;
  std::string spec;  // "" for the all-Top specification
  SynthResult result;

  /// {solved, time_ms, size, height, tested, eliminated, generated, cache_hits}
  std::string stats_json() const;
};

RunReport run_file(const std::filesystem::path& path, const RunConfig& cfg);

/// Every task of `dir` (sorted by file name) at Top, plus one row per file
/// carrying an `abs-out` directive. `base` applies to every row.
std::vector<RunReport> run_bench(const std::filesystem::path& dir, const RunConfig& base);

/// Applies `--flag value` style options (the `bench-args` directive syntax).
void apply_run_args(const std::string& args, RunConfig& cfg);

void print_bench_table(const std::vector<RunReport>& rows, std::ostream& out);

/// `args` excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace holesynth
