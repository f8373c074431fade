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

#include "symlat_cli/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "symlat/fixedpoints.hpp"
#include "symlat/lattice.hpp"
#include "symlat/solutions.hpp"

namespace symlat::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands{{
    {Command::CheckInvariance, "check-invariance"},
    {Command::SymDim, "symdim"},
    {Command::Solve, "solve"},
    {Command::Sublattice, "sublattice"},
    {Command::Orbits, "orbits"},
    {Command::AllSymmetric, "all-symmetric"},
    {Command::Full, "full"},
}};

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, s] : kCommands)
    if (s == name) return c;
  return std::nullopt;
}

std::string_view to_string(Command command) {
  for (const auto& [c, s] : kCommands)
    if (c == command) return s;
  return "full";
}

ProblemSpec apply_options(ProblemSpec spec, const RunOptions& options) {
  if (options.window_max) {
    const std::int64_t r = *options.window_max;
    auto& radii = spec.schedule.radii;
    radii.erase(std::remove_if(radii.begin(), radii.end(), [r](std::int64_t x) { return x > r; }), radii.end());
    if (radii.empty()) radii.push_back(std::max<std::int64_t>(r, 0));
    spec.solve_radius = std::min(spec.solve_radius, r);
    spec.sample_radius = std::min(spec.sample_radius, r);
  }
  if (options.pad_max) {
    const std::int64_t p = *options.pad_max;
    auto& pads = spec.schedule.pads;
    pads.erase(std::remove_if(pads.begin(), pads.end(), [p](std::int64_t x) { return x > p; }), pads.end());
    if (pads.empty()) pads.push_back(std::max<std::int64_t>(p, 0));
    spec.pad_limit = std::min(spec.pad_limit, p);
    spec.solve_pad = std::min(spec.solve_pad, p);
  }
  if (options.stability_runs) spec.schedule.stability_runs = *options.stability_runs;
  return spec;
}

namespace {

int exit_for(ErrorKind kind) { return kind == ErrorKind::NonTorsionCoefficient ? kNonTorsion : kMathError; }

Json error_json(const Error& e) {
  Json out{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (e.kind() == ErrorKind::NonTorsionCoefficient)
    out["note"] = "a homothety coefficient is not a root of unity, so no sublattice of Z^n is cut out by it";
  return out;
}

std::string membership_string(const Membership& m) {
  if (m.in()) return "In(" + std::to_string(m.pad) + ")";
  return m.disproved ? "NotIn" : "NotFoundUpTo(" + std::to_string(m.pad) + ")";
}

template <class T, class F>
Json map_array(const std::vector<T>& items, F&& f) {
  Json out = Json::array();
  for (const auto& x : items) out.push_back(f(x));
  return out;
}

std::string point_list(const std::vector<Exponent>& points) {
  std::string s;
  for (const auto& x : points) s += (s.empty() ? "" : " ") + x.to_string();
  return s;
}

Json problem_echo(const ProblemSpec& s) {
  return Json{
      {"name", s.name},
      {"n", s.n},
      {"k", s.k},
      {"conductor", s.conductor},
      {"group_generators", map_array(s.group_generators, [](const AutElement& g) { return g.to_string(); })},
      {"module_generators", map_array(s.module.generators, [](const ModuleVector& v) { return v.to_string(); })},
      {"schedule",
       Json{{"radii", s.schedule.radii},
            {"norm", std::string(to_string(s.schedule.norm))},
            {"pads", s.schedule.pads},
            {"stability_runs", s.schedule.stability_runs}}},
      {"samples", Json{{"radius", s.sample_radius}, {"pad_limit", s.pad_limit}}},
      {"solve", Json{{"radius", s.solve_radius}, {"pad", s.solve_pad}}},
      {"excluded_orbits", map_array(s.excluded_orbits, [](const Exponent& x) { return x.to_string(); })},
  };
}

bool is_diagonal(const GroupTable& group) {
  for (const auto& g : group.elements()) {
    const auto& m = g.monomial_part();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (m[i][j] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

Window solve_window(const ProblemSpec& s, const GroupTable& group) {
  return orbit_close(ball_window(s.n, s.solve_radius, s.schedule.norm), group);
}

std::string cyclotomic_string(const Cyclotomic& c) { return c.to_string(); }

Json invariance_section(const ProblemSpec& s, const GroupTable& group, bool& invariant) {
  InvarianceResult r = invariance_check(s.module, group, s.pad_limit);
  invariant = r.invariant();
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"generator", v.generator},
                              {"element", group[v.element].to_string()},
                              {"image", v.image.to_string()},
                              {"membership", membership_string(v.membership)}});
  return Json{{"verdict", invariant ? "Invariant" : "Violations"},
              {"pad_limit", s.pad_limit},
              {"violations", std::move(violations)}};
}

Json symdim_section(const ProblemSpec& s, const GroupTable& group) {
  SymDimReport rep = symmetric_dimension(s.module, group, s.schedule);
  Json windows = Json::array();
  for (const auto& e : rep.schedule)
    windows.push_back(Json{{"label", e.label},
                           {"radius", e.radius},
                           {"points", e.window_points},
                           {"dim_window", e.dim_window},
                           {"dim_submodule", e.dim_submodule},
                           {"chi_window", map_array(e.window_characters, cyclotomic_string)},
                           {"chi_submodule", map_array(e.submodule_characters, cyclotomic_string)},
                           {"dim_window_fixed", e.dim_window_fixed},
                           {"dim_submodule_fixed", e.dim_submodule_fixed},
                           {"quotient_dim", e.quotient_dim},
                           {"quotient_reynolds", e.quotient_reynolds},
                           {"pad_used", e.pad_used},
                           {"pad_stable", e.pad_stable}});
  Json out{{"verdict", rep.verdict.to_string()},
           {"heuristic", true},
           {"improper", rep.improper},
           {"windows", std::move(windows)},
           {"notes", rep.notes}};

  // The same schedule without symmetry: the dimension of the whole solution
  // space, and for groups acting by homotheties alone the identity
  // dim A^k/P = |G| * symmetric dimension.
  GroupTable trivial = generate_group(s.n, s.conductor, {AutElement::identity(s.n, s.conductor)});
  SymDimReport total = symmetric_dimension(s.module, trivial, s.schedule);
  std::vector<std::size_t> dims;
  for (const auto& e : total.schedule) dims.push_back(e.quotient_dim);
  out["total"] = Json{{"verdict", total.verdict.to_string()}, {"quotient_dims", dims}};
  Json identity{{"diagonal_group", is_diagonal(group)}};
  if (is_diagonal(group) && rep.verdict.kind == SymDimVerdict::Kind::Stabilized &&
      total.verdict.kind == SymDimVerdict::Kind::Stabilized) {
    identity["total_dim"] = total.verdict.value;
    identity["group_order"] = group.order();
    identity["symmetric_dim"] = rep.verdict.value;
    identity["holds"] = total.verdict.value == group.order() * rep.verdict.value;
  }
  out["quotient_identity"] = std::move(identity);
  return out;
}

Json function_json(const WindowFunction& f, std::size_t n) {
  Json values = Json::array();
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (f.values()[i].is_zero()) continue;
    const auto& [j, x] = f.window()[i];
    values.push_back(Json{{"component", j}, {"point", x.to_string()}, {"value", f.values()[i].to_string()}});
  }
  Json out{{"values", std::move(values)}};
  if (n == 1) {
    Json seqs = Json::array();
    for (std::size_t j = 0; j < f.window().rank(); ++j) seqs.push_back(render_sequence(f, j));
    out["sequences"] = std::move(seqs);
  }
  return out;
}

Json solve_section(const ProblemSpec& s, const GroupTable& group) {
  Window w = solve_window(s, group);
  auto all = solution_space_on_window(s.module, w, s.solve_pad);
  auto sym = symmetric_solution_basis(s.module, group, w, s.solve_pad);
  Json basis = Json::array();
  for (const auto& f : sym) basis.push_back(function_json(f, s.n));

  Window outer = orbit_close(ball_window(s.n, s.solve_radius + 2, s.schedule.norm), group);
  auto outer_sym = symmetric_solution_basis(s.module, group, outer, s.solve_pad);
  RestrictionResult rc = restriction_consistency(sym, outer_sym, w);
  std::string status = rc.consistent ? "Consistent"
                                     : "Drop(" + std::to_string(rc.dim_inner) + ", " +
                                           std::to_string(rc.dim_restricted) + ")";
  return Json{{"radius", s.solve_radius},
              {"pad", s.solve_pad},
              {"points", w.size()},
              {"solution_dim", all.size()},
              {"symmetric_dim", sym.size()},
              {"symmetric_basis", std::move(basis)},
              {"restriction", Json{{"outer_radius", s.solve_radius + 2},
                                   {"status", status},
                                   {"dim_inner", rc.dim_inner},
                                   {"dim_restricted", rc.dim_restricted}}}};
}

Json sublattice_section(const ProblemSpec& s, const GroupTable& group) {
  Sublattice lattice = invariant_sublattice(group);
  auto index = lattice.index();
  Json out{{"basis", lattice.to_string()},
           {"rank", lattice.rank()},
           {"index", index ? Json(*index) : Json("infinite")},
           {"group_order", group.order()}};
  if (index) {
    Window w = solve_window(s, group);
    SubspaceBasis c = contract(s.module, lattice, w, s.solve_pad);
    out["contraction"] = Json{{"radius", s.solve_radius}, {"pad", s.solve_pad}, {"dim", c.dimension()}};
  } else {
    out["contraction"] = Json{{"skipped", "sublattice is not of full rank"}};
  }
  return out;
}

std::string fixed_vector_string(const std::vector<std::pair<Exponent, Cyclotomic>>& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [x, c] : v) s += (s.empty() ? "" : " + ") + ("(" + c.to_string() + ")*s^" + x.to_string());
  return s;
}

Json orbits_section(const ProblemSpec& s, const GroupTable& group) {
  Window w = solve_window(s, group);
  OrbitDecomposition d = orbit_decomposition(group, w);
  Json orbits = Json::array();
  for (std::size_t i = 0; i < d.orbits.size(); ++i)
    orbits.push_back(Json{{"points", point_list(d.orbits[i])}, {"fixed", fixed_vector_string(d.fixed_vectors[i])}});
  ProjectionCheck pc = orbit_projection_check(s.module, group, w, s.excluded_orbits, s.solve_pad);
  Json projection{{"covered", pc.covered}, {"evidence", "window"}};
  if (!pc.covered)
    projection["first_failure"] =
        Json{{"orbit", point_list(d.orbits[pc.orbit])}, {"component", pc.component}};
  return Json{{"radius", s.solve_radius},
              {"count", d.orbits.size()},
              {"orbits", std::move(orbits)},
              {"excluded", point_list(s.excluded_orbits)},
              {"projection", std::move(projection)}};
}

Json all_symmetric_section(const ProblemSpec& s, const GroupTable& group) {
  Window sample = ball_window(s.n, s.sample_radius, s.schedule.norm);
  AllSymmetricResult r = all_solutions_symmetric_check(s.module, group, sample, s.pad_limit);
  Json out{{"verdict", r.holds ? "Holds" : (r.exact ? "Fails" : "Inconclusive")},
           {"evidence", "sampled"},
           {"sample_radius", s.sample_radius},
           {"pad_limit", s.pad_limit},
           {"checked", r.checked}};
  if (!r.holds)
    out["counterexample"] = Json{{"tuple", point_list(r.tuple)}, {"element", group[r.element].to_string()},
                                 {"exact", r.exact}};
  return out;
}

}  // namespace

RunResult run(Command command, const ProblemSpec& spec) {
  RunResult result;
  Json& report = result.report;
  report["tool"] = "symlat";
  report["version"] = std::string(kToolVersion);
  report["command"] = std::string(to_string(command));
  report["problem"] = problem_echo(spec);

  auto fail = [&](const char* key, const Error& e) {
    report[key] = error_json(e);
    result.exit_code = std::max(result.exit_code, exit_for(e.kind()));
  };

  GroupTable group;
  try {
    group = build_group(spec);
  } catch (const Error& e) {
    fail("group", e);
    return result;
  }
  report["group"] = Json{{"order", group.order()},
                         {"elements", map_array(group.elements(), [](const AutElement& g) { return g.to_string(); })}};

  auto section = [&](const char* key, auto&& body) {
    try {
      report[key] = body();
    } catch (const Error& e) {
      fail(key, e);
    }
  };
  const bool all = command == Command::Full;
  auto wants = [&](Command c) { return all || command == c; };

  bool invariant = false;
  section("invariance", [&] { return invariance_section(spec, group, invariant); });
  const bool gated = wants(Command::SymDim) || wants(Command::Solve) || wants(Command::Orbits) ||
                     wants(Command::AllSymmetric);
  if (gated && !invariant) result.exit_code = std::max<int>(result.exit_code, kMathError);
  auto dependent = [&](Command c, const char* key, auto&& body) {
    if (!wants(c)) return;
    if (!invariant) {
      report[key] = Json{{"skipped", "P is not G-invariant"}};
      return;
    }
    section(key, body);
  };

  dependent(Command::SymDim, "symdim", [&] { return symdim_section(spec, group); });
  dependent(Command::Solve, "solve", [&] { return solve_section(spec, group); });
  if (wants(Command::Sublattice)) section("sublattice", [&] { return sublattice_section(spec, group); });
  dependent(Command::Orbits, "orbits", [&] { return orbits_section(spec, group); });
  dependent(Command::AllSymmetric, "all_symmetric", [&] { return all_symmetric_section(spec, group); });
  return result;
}

std::string render_machine(const Json& report) { return report.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool all_scalars(const Json& a) {
  return std::all_of(a.begin(), a.end(), [](const Json& v) { return v.is_primitive(); });
}

void emit(std::ostringstream& os, const std::string& key, const Json& value, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (value.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) emit(os, k, v, indent + 2);
  } else if (value.is_array() && all_scalars(value)) {
    os << pad << key << ": [";
    for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ", " : "") << scalar_text(value[i]);
    os << "]\n";
  } else if (value.is_array()) {
    os << pad << key << ":\n";
    for (std::size_t i = 0; i < value.size(); ++i) emit(os, "[" + std::to_string(i) + "]", value[i], indent + 2);
  } else {
    os << pad << key << ": " << scalar_text(value) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  for (const auto& [k, v] : report.items()) emit(os, k, v, 0);
  return os.str();
}

}  // namespace symlat::cli
