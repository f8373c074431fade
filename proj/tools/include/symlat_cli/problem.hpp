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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "symlat/fixedpoints.hpp"
#include "symlat/group.hpp"
#include "symlat/laurent.hpp"

namespace symlat::cli {

/// A problem file: the group, the module, and the analysis parameters.
struct ProblemSpec {
  std::string name;
  std::size_t n = 1;
  std::size_t k = 1;
  int conductor = 1;
  std::vector<AutElement> group_generators;
  ModulePresentation module;
  WindowSchedule schedule;
  /// Tuples for the all-solutions-symmetric check come from ball(sample_radius).
  std::int64_t sample_radius = 2;
  std::int64_t pad_limit = 4;
  /// Window and pad for explicit solution bases and orbit checks.
  std::int64_t solve_radius = 4;
  std::int64_t solve_pad = 1;
  /// Points naming the orbits excluded from the orbit projection check.
  std::vector<Exponent> excluded_orbits;

  friend bool operator==(const ProblemSpec& a, const ProblemSpec& b);
};

/// Parses TOML text. Errors name the offending field; syntax errors carry the
/// line. Throws Error (Parse, Validation or ConductorMismatch).
ProblemSpec parse_problem_text(std::string_view text, std::string_view source = "<string>");
ProblemSpec parse_problem(const std::filesystem::path& path);

/// Canonical TOML; parse_problem_text(serialize_problem(s)) == s.
std::string serialize_problem(const ProblemSpec& spec);

GroupTable build_group(const ProblemSpec& spec);

}  // namespace symlat::cli
