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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "symlat_cli/report.hpp"

int main(int argc, char** argv) {
  using namespace symlat::cli;
  CLI::App app{"Symmetric solutions of G-invariant linear partial difference equations on Z^n"};
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string command_name, path, format = "text";
  RunOptions options;
  app.add_option("command", command_name,
                 "check-invariance | symdim | solve | sublattice | orbits | all-symmetric | full")
      ->required()
      ->check(CLI::IsMember({"check-invariance", "symdim", "solve", "sublattice", "orbits", "all-symmetric", "full"}));
  app.add_option("file", path, "problem file (TOML)")->required()->check(CLI::ExistingFile);
  app.add_option("--window-max", options.window_max, "drop scheduled radii above R")->check(CLI::NonNegativeNumber);
  app.add_option("--pad-max", options.pad_max, "drop scheduled pads above P")->check(CLI::NonNegativeNumber);
  app.add_option("--stability-runs", options.stability_runs, "equal quotient dims needed to stabilize")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text | machine")->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  ProblemSpec spec;
  try {
    spec = apply_options(parse_problem(path), options);
  } catch (const symlat::Error& e) {
    std::cerr << "symlat: " << e.what() << "\n";
    return kUsage;
  }

  RunResult result = run(*parse_command(command_name), spec);
  std::cout << (format == "machine" ? render_machine(result.report) : render_text(result.report));
  return result.exit_code;
}
