/*
   Copyright 2026 The symlat Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "symlat_cli/problem.hpp"

namespace symlat::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Command { CheckInvariance, SymDim, Solve, Sublattice, Orbits, AllSymmetric, Full };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command command);

/// Command-line overrides; each one only ever shrinks the work.
struct RunOptions {
  std::optional<std::int64_t> window_max;
  std::optional<std::int64_t> pad_max;
  std::optional<std::size_t> stability_runs;
};

ProblemSpec apply_options(ProblemSpec spec, const RunOptions& options);

enum ExitCode : int { kOk = 0, kUsage = 1, kMathError = 2, kNonTorsion = 3 };

struct RunResult {
  nlohmann::ordered_json report;
  int exit_code = kOk;
};

/// Runs one command (or all of them for Full). Mathematical failures are
/// recorded in the report under the failing section and set the exit code;
/// they never escape as exceptions.
RunResult run(Command command, const ProblemSpec& spec);

/// Pretty-printed JSON, newline terminated.
std::string render_machine(const nlohmann::ordered_json& report);
/// Indented "key: value" rendering of the same data.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace symlat::cli
