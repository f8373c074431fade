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

#include "symlat_cli/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "toml.hpp"

namespace symlat::cli {

bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
  return a.name == b.name && a.n == b.n && a.k == b.k && a.conductor == b.conductor &&
         a.group_generators == b.group_generators && a.module.n == b.module.n && a.module.k == b.module.k &&
         a.module.conductor == b.module.conductor && a.module.generators == b.module.generators &&
         a.schedule.radii == b.schedule.radii && a.schedule.norm == b.schedule.norm &&
         a.schedule.pads == b.schedule.pads && a.schedule.stability_runs == b.schedule.stability_runs &&
         a.sample_radius == b.sample_radius && a.pad_limit == b.pad_limit && a.solve_radius == b.solve_radius &&
         a.solve_pad == b.solve_pad && a.excluded_orbits == b.excluded_orbits;
}

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::Validation, field + ": " + what);
}

void check_keys(const toml::table& t, const std::string& where, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : t) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key.str() == a;
    if (!ok) invalid(where.empty() ? std::string(key.str()) : where + "." + std::string(key.str()), "unknown key");
  }
}

std::int64_t as_int(const toml::node* node, const std::string& field) {
  if (!node) invalid(field, "missing");
  auto v = node->value<std::int64_t>();
  if (!v || !node->is_integer()) invalid(field, "expected an integer");
  return *v;
}

std::int64_t int_or(const toml::node* node, const std::string& field, std::int64_t fallback) {
  return node ? as_int(node, field) : fallback;
}

const toml::array& as_array(const toml::node* node, const std::string& field) {
  if (!node || !node->is_array()) invalid(field, "expected an array");
  return *node->as_array();
}

std::string as_string(const toml::node* node, const std::string& field) {
  if (!node || !node->is_string()) invalid(field, "expected a string");
  return std::string(node->as_string()->get());
}

std::vector<std::int64_t> int_list(const toml::node* node, const std::string& field) {
  std::vector<std::int64_t> out;
  const auto& arr = as_array(node, field);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_int(arr.get(i), field + "[" + std::to_string(i) + "]"));
  return out;
}

// Re-throws library errors with the field path in front.
template <class F>
auto at_field(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    std::string what = e.what();
    auto colon = what.find(": ");
    throw Error(e.kind(), field + ": " + (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
}

AutElement parse_generator(const toml::node& node, const ProblemSpec& spec, const std::string& field) {
  if (!node.is_table()) invalid(field, "expected a table {R = [...], M = [[...]]}");
  const auto& t = *node.as_table();
  check_keys(t, field, {"R", "M"});
  const auto& r_arr = as_array(t.get("R"), field + ".R");
  if (r_arr.size() != spec.n) invalid(field + ".R", "expected " + std::to_string(spec.n) + " scalars");
  std::vector<Cyclotomic> r;
  for (std::size_t i = 0; i < r_arr.size(); ++i) {
    std::string f = field + ".R[" + std::to_string(i) + "]";
    std::string text = as_string(r_arr.get(i), f);
    r.push_back(at_field(f, [&] { return Cyclotomic::parse(spec.conductor, text); }));
    if (r.back().is_zero()) invalid(f, "homothety entries must be nonzero");
  }
  const auto& m_arr = as_array(t.get("M"), field + ".M");
  if (m_arr.size() != spec.n) invalid(field + ".M", "expected " + std::to_string(spec.n) + " rows");
  IntMatrix m;
  for (std::size_t i = 0; i < m_arr.size(); ++i) {
    std::string f = field + ".M[" + std::to_string(i) + "]";
    m.push_back(int_list(m_arr.get(i), f));
    if (m.back().size() != spec.n) invalid(f, "expected " + std::to_string(spec.n) + " entries");
  }
  std::int64_t det = determinant(m);
  if (det != 1 && det != -1) invalid(field + ".M", "not unimodular (det " + std::to_string(det) + ")");
  return AutElement(std::move(r), std::move(m));
}

ProblemSpec from_table(const toml::table& root) {
  check_keys(root, "", {"name", "n", "k", "conductor", "group", "module", "schedule", "samples", "solve", "orbits"});
  ProblemSpec spec;
  if (const auto* name = root.get("name")) spec.name = as_string(name, "name");
  std::int64_t n = as_int(root.get("n"), "n"), k = as_int(root.get("k"), "k"), N = as_int(root.get("conductor"), "conductor");
  if (n < 1 || n > 8) invalid("n", "must be between 1 and 8");
  if (k < 1) invalid("k", "must be positive");
  if (N < 1 || N > 1000) invalid("conductor", "must be between 1 and 1000");
  spec.n = static_cast<std::size_t>(n);
  spec.k = static_cast<std::size_t>(k);
  spec.conductor = static_cast<int>(N);

  if (const auto* group = root.get("group")) {
    if (!group->is_table()) invalid("group", "expected a table");
    check_keys(*group->as_table(), "group", {"generators"});
    const auto& gens = as_array(group->as_table()->get("generators"), "group.generators");
    for (std::size_t i = 0; i < gens.size(); ++i)
      spec.group_generators.push_back(parse_generator(*gens.get(i), spec, "group.generators[" + std::to_string(i) + "]"));
  }

  const auto* module = root.get("module");
  if (!module || !module->is_table()) invalid("module", "missing table");
  check_keys(*module->as_table(), "module", {"generators"});
  const auto& mgens = as_array(module->as_table()->get("generators"), "module.generators");
  if (mgens.empty()) invalid("module.generators", "at least one generator is required");
  spec.module = ModulePresentation{spec.n, spec.k, spec.conductor, {}};
  for (std::size_t i = 0; i < mgens.size(); ++i) {
    std::string f = "module.generators[" + std::to_string(i) + "]";
    const auto& entries = as_array(mgens.get(i), f);
    if (entries.size() != spec.k) invalid(f, "expected " + std::to_string(spec.k) + " entries");
    std::vector<LaurentPoly> polys;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      std::string fj = f + "[" + std::to_string(j) + "]";
      std::string text = as_string(entries.get(j), fj);
      polys.push_back(at_field(fj, [&] { return LaurentPoly::parse(spec.n, spec.conductor, text); }));
    }
    spec.module.generators.emplace_back(std::move(polys));
  }

  if (const auto* s = root.get("schedule")) {
    if (!s->is_table()) invalid("schedule", "expected a table");
    const auto& t = *s->as_table();
    check_keys(t, "schedule", {"radii", "norm", "pads", "stability_runs"});
    if (t.get("radii")) spec.schedule.radii = int_list(t.get("radii"), "schedule.radii");
    if (t.get("norm"))
      spec.schedule.norm = at_field("schedule.norm", [&] { return parse_norm(as_string(t.get("norm"), "schedule.norm")); });
    if (t.get("pads")) spec.schedule.pads = int_list(t.get("pads"), "schedule.pads");
    std::int64_t runs = int_or(t.get("stability_runs"), "schedule.stability_runs", 3);
    if (runs < 1) invalid("schedule.stability_runs", "must be positive");
    spec.schedule.stability_runs = static_cast<std::size_t>(runs);
  }
  if (spec.schedule.radii.empty())
    for (std::int64_t r = 1; r <= 6; ++r) spec.schedule.radii.push_back(r);
  for (std::size_t i = 0; i < spec.schedule.radii.size(); ++i)
    if (spec.schedule.radii[i] < 0 || (i && spec.schedule.radii[i] <= spec.schedule.radii[i - 1]))
      invalid("schedule.radii", "must be nonnegative and strictly increasing");
  if (spec.schedule.pads.empty()) invalid("schedule.pads", "must be nonempty");
  for (std::size_t i = 0; i < spec.schedule.pads.size(); ++i)
    if (spec.schedule.pads[i] < 0 || (i && spec.schedule.pads[i] <= spec.schedule.pads[i - 1]))
      invalid("schedule.pads", "must be nonnegative and strictly increasing");

  if (const auto* s = root.get("samples")) {
    if (!s->is_table()) invalid("samples", "expected a table");
    check_keys(*s->as_table(), "samples", {"radius", "pad_limit"});
    spec.sample_radius = int_or(s->as_table()->get("radius"), "samples.radius", spec.sample_radius);
    spec.pad_limit = int_or(s->as_table()->get("pad_limit"), "samples.pad_limit", spec.pad_limit);
  }
  if (const auto* s = root.get("solve")) {
    if (!s->is_table()) invalid("solve", "expected a table");
    check_keys(*s->as_table(), "solve", {"radius", "pad"});
    spec.solve_radius = int_or(s->as_table()->get("radius"), "solve.radius", spec.solve_radius);
    spec.solve_pad = int_or(s->as_table()->get("pad"), "solve.pad", spec.solve_pad);
  }
  if (const auto* s = root.get("orbits")) {
    if (!s->is_table()) invalid("orbits", "expected a table");
    check_keys(*s->as_table(), "orbits", {"excluded"});
    const auto& ex = as_array(s->as_table()->get("excluded"), "orbits.excluded");
    for (std::size_t i = 0; i < ex.size(); ++i) {
      std::string f = "orbits.excluded[" + std::to_string(i) + "]";
      auto coords = int_list(ex.get(i), f);
      if (coords.size() != spec.n) invalid(f, "expected " + std::to_string(spec.n) + " coordinates");
      spec.excluded_orbits.emplace_back(std::move(coords));
    }
  }
  for (auto [value, field] : {std::pair{spec.sample_radius, "samples.radius"}, {spec.pad_limit, "samples.pad_limit"},
                              {spec.solve_radius, "solve.radius"}, {spec.solve_pad, "solve.pad"}})
    if (value < 0) invalid(field, "must be nonnegative");
  return spec;
}

toml::array to_array(const std::vector<std::int64_t>& v) {
  toml::array a;
  for (auto x : v) a.push_back(x);
  return a;
}

}  // namespace

ProblemSpec parse_problem_text(std::string_view text, std::string_view source) {
  toml::table root;
  try {
    root = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << source << ":" << e.source().begin.line << ":" << e.source().begin.column << ": " << e.description();
    throw Error(ErrorKind::Parse, os.str());
  }
  return from_table(root);
}

ProblemSpec parse_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str(), path.string());
}

std::string serialize_problem(const ProblemSpec& spec) {
  toml::table root;
  if (!spec.name.empty()) root.insert("name", spec.name);
  root.insert("n", static_cast<std::int64_t>(spec.n));
  root.insert("k", static_cast<std::int64_t>(spec.k));
  root.insert("conductor", static_cast<std::int64_t>(spec.conductor));

  toml::array gens;
  for (const auto& g : spec.group_generators) {
    toml::array r, m;
    for (const auto& c : g.homothety_part()) r.push_back(c.to_string());
    for (const auto& row : g.monomial_part()) m.push_back(to_array(row));
    gens.push_back(toml::table{{"R", r}, {"M", m}});
  }
  root.insert("group", toml::table{{"generators", gens}});

  toml::array mgens;
  for (const auto& v : spec.module.generators) {
    toml::array entries;
    for (const auto& p : v.entries()) entries.push_back(p.to_string());
    mgens.push_back(entries);
  }
  root.insert("module", toml::table{{"generators", mgens}});

  root.insert("schedule", toml::table{{"radii", to_array(spec.schedule.radii)},
                                      {"norm", std::string(to_string(spec.schedule.norm))},
                                      {"pads", to_array(spec.schedule.pads)},
                                      {"stability_runs", static_cast<std::int64_t>(spec.schedule.stability_runs)}});
  root.insert("samples", toml::table{{"radius", spec.sample_radius}, {"pad_limit", spec.pad_limit}});
  root.insert("solve", toml::table{{"radius", spec.solve_radius}, {"pad", spec.solve_pad}});
  toml::array excluded;
  for (const auto& x : spec.excluded_orbits) excluded.push_back(to_array(x.coords()));
  root.insert("orbits", toml::table{{"excluded", excluded}});

  std::ostringstream os;
  os << root << "\n";
  return os.str();
}

GroupTable build_group(const ProblemSpec& spec) {
  if (spec.group_generators.empty())
    return generate_group(spec.n, spec.conductor, {AutElement::identity(spec.n, spec.conductor)});
  return generate_group(spec.n, spec.conductor, spec.group_generators);
}

}  // namespace symlat::cli
