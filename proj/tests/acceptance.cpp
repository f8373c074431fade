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

// Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.
// Worked examples are checked through the same reports the CLI emits.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "instances.hpp"
#include "symlat_cli/problem.hpp"
#include "symlat_cli/report.hpp"

namespace {

using namespace symlat;
using Json = nlohmann::ordered_json;

const std::filesystem::path kProblems = SYMLAT_PROBLEMS_DIR;

// Collects mismatches for one criterion; the first few are printed.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << actual << ", expected " << expected;
    expect(actual == expected, os.str());
  }
  bool report(int number, const std::string& title) const {
    const bool pass = failures_.empty() && checks_ > 0;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << checks_
              << " checks)\n";
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) std::cout << "    " << failures_[i] << "\n";
    return pass;
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(kProblems))
    if (e.path().extension() == ".toml") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

Json full_report(const std::string& name, int* exit_code = nullptr) {
  auto result = cli::run(cli::Command::Full, cli::parse_problem(kProblems / (name + ".toml")));
  if (exit_code) *exit_code = result.exit_code;
  return result.report;
}

std::string str(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::int64_t point_value(const std::string& point) { return std::stoll(point.substr(1, point.size() - 2)); }

struct Invocation {
  int code;
  std::string out;
};

Invocation invoke(const std::string& args) {
  std::string cmd = std::string(SYMLAT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Reflection x -> -x with P = (s + 1/s).
bool criterion1() {
  Criterion c;
  Json r = full_report("ex1i");
  const auto& windows = r["symdim"]["windows"];
  c.equal(windows.size(), 6u, "window count");
  for (std::size_t idx = 0; idx < windows.size(); ++idx) {
    const auto& w = windows[idx];
    const std::int64_t i = w["radius"];
    const std::string at = "W_" + std::to_string(i);
    c.equal(w["dim_window"].get<std::int64_t>(), 2 * i + 1, at + " dim W");
    c.equal(w["dim_submodule"].get<std::int64_t>(), 2 * i - 1, at + " dim I");
    c.equal(str(w["chi_window"][1]), "1", at + " chi(-1) on W");
    c.equal(str(w["chi_submodule"][1]), "1", at + " chi(-1) on I");
    c.equal(w["dim_window_fixed"].get<std::int64_t>(), i + 1, at + " dim W^G");
    c.equal(w["dim_submodule_fixed"].get<std::int64_t>(), i, at + " dim I^G");
    c.equal(w["quotient_dim"].get<std::int64_t>(), 1, at + " quotient dim");
  }
  c.equal(str(r["symdim"]["verdict"]), "Stabilized(1)", "verdict");
  const auto& basis = r["solve"]["symmetric_basis"];
  c.equal(basis.size(), 1u, "symmetric basis size");
  if (!basis.empty()) {
    auto seq = str(basis[0]["sequences"][0]);
    c.expect(contains(seq, "0, -1, 0, 1̂, 0, -1, 0"), "sequence " + seq);
  }
  c.equal(r["solve"]["solution_dim"].get<std::int64_t>(), 2, "solution space dim on the window");
  c.equal(str(r["symdim"]["total"]["verdict"]), "Stabilized(2)", "total solution space");
  return c.report(1, "reflection group, I = (s + 1/s)");
}

bool criterion2() {
  Criterion c;
  Json r = full_report("ex1ii");
  for (const auto& w : r["symdim"]["windows"]) {
    const std::int64_t i = w["radius"];
    const std::string at = "J_" + std::to_string(i);
    c.equal(str(w["chi_submodule"][1]), "-1", at + " chi(-1)");
    c.equal(w["dim_submodule_fixed"].get<std::int64_t>(), i - 1, at + " dim J^G");
    c.equal(w["quotient_dim"].get<std::int64_t>(), 2, at + " quotient dim");
  }
  c.equal(r["symdim"]["windows"].size(), 6u, "window count");
  c.equal(str(r["symdim"]["verdict"]), "Stabilized(2)", "verdict");
  const auto& basis = r["solve"]["symmetric_basis"];
  c.equal(basis.size(), 2u, "symmetric basis size");
  if (basis.size() == 2) {
    auto a = str(basis[0]["sequences"][0]), b = str(basis[1]["sequences"][0]);
    c.expect(contains(a, "0, 1, 0, 1̂, 0, 1, 0"), "first sequence " + a);
    c.expect(contains(b, "1, 0, 1, 0̂, 1, 0, 1"), "second sequence " + b);
  }
  c.equal(str(r["all_symmetric"]["verdict"]), "Holds", "all-symmetric check");
  return c.report(2, "reflection group, J = (s - 1/s)");
}

bool criterion3() {
  Criterion c;
  for (int d : {2, 3, 5}) {
    const std::string at = "d=" + std::to_string(d) + " ";
    Json r = full_report("ex2-d" + std::to_string(d));
    c.equal(str(r["symdim"]["verdict"]), "Stabilized(1)", at + "verdict");
    const auto& basis = r["solve"]["symmetric_basis"];
    c.equal(basis.size(), 1u, at + "basis size");
    if (basis.size() == 1) {
      std::size_t multiples = 0;
      for (const auto& v : basis[0]["values"]) {
        const std::int64_t x = point_value(str(v["point"]));
        c.expect(x % d == 0 && str(v["value"]) == "1", at + "value at " + str(v["point"]));
        ++multiples;
      }
      const std::int64_t radius = r["solve"]["radius"];
      c.equal(multiples, static_cast<std::size_t>(2 * (radius / d) + 1), at + "support of the indicator");
    }
    c.equal(str(r["sublattice"]["basis"]), "[[" + std::to_string(d) + "]] index " + std::to_string(d),
            at + "sublattice");
    c.equal(r["sublattice"]["index"].dump(), r["group"]["order"].dump(), at + "index = |G|");
    for (const auto& q : r["symdim"]["total"]["quotient_dims"]) c.equal(q.get<int>(), d, at + "dim A/I on window");
    c.equal(r["symdim"]["quotient_identity"].value("holds", false), true, at + "dim = dim(A/I)/|G|");
  }
  return c.report(3, "roots of unity, I = (1 - s^d), d = 2, 3, 5");
}

bool criterion4() {
  Criterion c;
  Json r = full_report("ex3");
  const auto& windows = r["symdim"]["windows"];
  c.equal(windows.size(), 5u, "window count");
  for (const auto& w : windows) {
    const std::int64_t i = w["radius"];
    const std::int64_t h = i / 2;
    const bool even = i % 2 == 0;
    const std::string at = "W_" + std::to_string(i) + " ";
    c.equal(w["dim_window"].get<std::int64_t>(), 2 * i * i + 2 * i + 1, at + "dim W");
    c.equal(w["dim_submodule"].get<std::int64_t>(), 2 * i * i, at + "dim I");
    c.equal(str(w["chi_window"][1]), std::to_string(2 * h + 1), at + "chi(tau) on W");
    c.equal(w["dim_window_fixed"].get<std::int64_t>(),
            even ? 4 * h * h + 3 * h + 1 : 4 * h * h + 7 * h + 3, at + "dim W^G");
    c.equal(str(w["chi_submodule"][1]), std::to_string(even ? -2 * h : -2 * h - 2), at + "chi(tau) on I");
    c.equal(w["dim_submodule_fixed"].get<std::int64_t>(), even ? 4 * h * h - h : 4 * h * h + 3 * h, at + "dim I^G");
    c.equal(w["quotient_dim"].get<std::int64_t>(), 2 * i + 1, at + "quotient dim");
  }
  c.equal(str(r["symdim"]["verdict"]), "Growing", "verdict");
  c.equal(str(r["all_symmetric"]["verdict"]), "Holds", "all-symmetric check");
  return c.report(4, "coordinate swap on Z^2, I = (s1 - s2)");
}

bool criterion5() {
  Criterion c;
  Json r = full_report("ex1-homothety");
  const auto& basis = r["solve"]["symmetric_basis"];
  c.expect(!basis.empty(), "no symmetric basis");
  for (const auto& f : basis)
    for (const auto& v : f["values"]) {
      const std::int64_t x = point_value(str(v["point"]));
      c.expect(x % 2 == 0, "nonzero value at odd point " + str(v["point"]));
    }
  c.equal(str(r["sublattice"]["basis"]), "[[2]] index 2", "sublattice");
  c.equal(r["sublattice"]["index"].dump(), "2", "index");
  return c.report(5, "homothety s -> -s: symmetric functions vanish on odd points, sublattice 2Z");
}

bool criterion6() {
  Criterion c;
  for (const auto& path : corpus()) {
    auto spec = cli::parse_problem(path);
    auto group = cli::build_group(spec);
    if (!invariance_check(spec.module, group, spec.pad_limit).invariant()) continue;
    SymDimReport rep = symmetric_dimension(spec.module, group, spec.schedule);
    if (rep.improper) continue;
    for (const auto& e : rep.schedule) {
      Window w = orbit_close(ball_window(spec.n, e.radius, spec.schedule.norm), group);
      if (!w.contains(Exponent::zero(spec.n))) continue;
      c.expect(e.quotient_dim >= 1, path.stem().string() + " " + e.label + ": symmetric dimension 0");
    }
  }
  return c.report(6, "nontrivial symmetric solutions for every proper invariant corpus case");
}

bool criterion7() {
  Criterion c;
  std::size_t corpus_windows = 0, random = 0;
  for (const auto& path : corpus()) {
    auto spec = cli::parse_problem(path);
    auto group = cli::build_group(spec);
    if (!invariance_check(spec.module, group, spec.pad_limit).invariant()) continue;
    for (std::int64_t radius : spec.schedule.radii) {
      if (radius > 4) break;
      WindowSchedule one = spec.schedule;
      one.radii = {radius};
      auto x = testing::cross_path(spec.module, group, one);
      c.expect(x.agrees(), path.stem().string() + " r=" + std::to_string(radius) + ": " + x.describe());
      ++corpus_windows;
    }
  }
  for (const auto& inst : testing::random_instances(120, 20261019)) {
    auto x = testing::cross_path(inst.module, inst.group, inst.schedule);
    c.expect(x.agrees(), inst.label + ": " + x.describe());
    ++random;
  }
  c.expect(random >= 100, "fewer than 100 random instances");
  return c.report(7, "cross-path equality on " + std::to_string(corpus_windows) + " corpus windows and " +
                         std::to_string(random) + " random instances");
}

bool criterion8() {
  Criterion c;
  std::size_t evaluations = 0;
  auto evaluate = [&](const std::string& label, const ModulePresentation& p, const GroupTable& g,
                      const WindowSchedule& s) {
    try {
      SymDimReport rep = symmetric_dimension(p, g, s);
      evaluations += 2 * rep.schedule.size();
      c.expect(true, label);
    } catch (const Error& e) {
      c.expect(e.kind() != ErrorKind::NonIntegralCharacterSum, label + ": " + e.what());
    }
  };
  for (const auto& path : corpus()) {
    auto spec = cli::parse_problem(path);
    auto group = cli::build_group(spec);
    if (!invariance_check(spec.module, group, spec.pad_limit).invariant()) continue;
    evaluate(path.stem().string(), spec.module, group, spec.schedule);
  }
  for (const auto& inst : testing::random_instances(120, 20261019))
    evaluate(inst.label, inst.module, inst.group, inst.schedule);
  return c.report(8, "(1/|G|) sum chi is a nonnegative integer in all " + std::to_string(evaluations) +
                         " evaluations");
}

bool criterion9() {
  Criterion c;
  int code = 0;
  Json bad = full_report("neg-noninvariant", &code);
  c.equal(str(bad["invariance"]["verdict"]), "Violations", "s - 2 under reflection");
  c.expect(!bad["invariance"]["violations"].empty(), "no violation listed");
  Json nt = full_report("neg-nontorsion", &code);
  c.equal(code, 3, "run exit code");
  c.equal(str(nt["sublattice"]["error"]), "NonTorsionCoefficient", "sublattice error");
  c.expect(nt["sublattice"].contains("note"), "report note");
  auto binary = invoke("full " + (kProblems / "neg-nontorsion.toml").string());
  c.equal(binary.code, 3, "binary exit code");
  c.expect(contains(binary.out, "NonTorsionCoefficient"), "text report names the error");
  return c.report(9, "negative cases: invariance violations, non-torsion coefficient (exit 3)");
}

bool criterion10() {
  Criterion c;
  for (const auto& path : corpus()) {
    auto a = invoke("full " + path.string() + " --format machine");
    auto b = invoke("full " + path.string() + " --format machine");
    c.expect(!a.out.empty(), path.stem().string() + ": empty report");
    c.expect(a.out == b.out, path.stem().string() + ": reports differ");
  }
  return c.report(10, "byte-identical machine reports across two runs of the corpus");
}

}  // namespace

int main() {
  bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                          criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    bool pass = false;
    try {
      pass = criteria[i]();
    } catch (const std::exception& e) {
      std::cout << "FAIL criterion " << i + 1 << ": " << e.what() << "\n";
    }
    failed += pass ? 0 : 1;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed\n" : "acceptance: all passed\n");
  return failed ? 1 : 0;
}
