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

#include "symlat/fixedpoints.hpp"

#include <algorithm>

namespace symlat {

Cyclotomic character(const AutElement& g, const SubspaceBasis& s) {
  const int conductor = s.conductor();
  MonomialMatrix m = group_matrix(g, s.window());
  Cyclotomic trace = Cyclotomic::zero(conductor);
  for (const auto& [pivot, row] : s.echelon().rows()) {
    SparseVector image = m.apply(row);
    if (!s.echelon().contains(image))
      throw Error(ErrorKind::NotInvariant, "subspace is not invariant under " + g.to_string());
    // In RREF coordinates the component of image along this row is its
    // entry at the row's pivot.
    trace += sparse_at(image, pivot, conductor);
  }
  return trace;
}

namespace {

std::size_t average_to_dimension(const Cyclotomic& sum, std::size_t order) {
  Cyclotomic avg = sum;
  avg *= Rational(1) / Rational(static_cast<std::int64_t>(order));
  auto r = avg.as_rational();
  if (!r || !r->is_integer() || r->sign() < 0)
    throw Error(ErrorKind::NonIntegralCharacterSum,
                "(1/|G|) sum chi = " + avg.to_string() + " is not a nonnegative integer");
  return static_cast<std::size_t>(as_integer(avg));
}

}  // namespace

std::size_t fixed_dim_by_character(const GroupTable& group, const SubspaceBasis& s) {
  Cyclotomic sum = Cyclotomic::zero(s.conductor());
  for (const auto& g : group.elements()) sum += character(g, s);
  return average_to_dimension(sum, group.order());
}

SparseVector reynolds_average(const GroupTable& group, const std::vector<MonomialMatrix>& matrices,
                              const SparseVector& v) {
  std::vector<std::pair<std::size_t, Cyclotomic>> acc;
  for (const auto& m : matrices)
    for (auto& e : m.apply(v)) acc.push_back(std::move(e));
  SparseVector sum = sparse_from_pairs(std::move(acc));
  if (sum.empty()) return sum;
  Cyclotomic scale = Cyclotomic::from_rational(sum.front().second.conductor(),
                                               Rational(1) / Rational(static_cast<std::int64_t>(group.order())));
  return sparse_scale(sum, scale);
}

namespace {

std::vector<MonomialMatrix> all_matrices(const GroupTable& group, const WindowBasis& basis) {
  std::vector<MonomialMatrix> out;
  out.reserve(group.order());
  for (const auto& g : group.elements()) out.push_back(group_matrix(g, basis));
  return out;
}

}  // namespace

SubspaceBasis reynolds_fixed_space(const GroupTable& group, const SubspaceBasis& s) {
  auto matrices = all_matrices(group, s.window());
  EchelonForm image(s.window().size(), s.conductor());
  for (const auto& row : s.vectors()) {
    for (std::size_t i = 0; i < matrices.size(); ++i)
      if (!s.echelon().contains(matrices[i].apply(row)))
        throw Error(ErrorKind::NotInvariant, "subspace is not invariant under " + group[i].to_string());
    image.insert(reynolds_average(group, matrices, row));
  }
  return SubspaceBasis(s.window_ptr(), std::move(image));
}

std::size_t quotient_reynolds_rank(const GroupTable& group, const SubspaceBasis& submodule) {
  const auto& basis = submodule.window();
  const int conductor = submodule.conductor();
  auto matrices = all_matrices(group, basis);
  const auto& form = submodule.echelon();
  // Quotient coordinates: reduce modulo P_W, read off the non-pivot entries.
  EchelonForm image(basis.size(), conductor);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (form.rows().count(c)) continue;
    SparseVector e{{c, Cyclotomic::one(conductor)}};
    image.insert(form.reduce(reynolds_average(group, matrices, e)));
  }
  return image.rank();
}

InvarianceResult invariance_check(const ModulePresentation& p, const GroupTable& group, std::int64_t pad_limit) {
  p.validate();
  InvarianceResult result;
  for (std::size_t gi = 0; gi < p.generators.size(); ++gi) {
    const auto& v = p.generators[gi];
    for (std::size_t e = 0; e < group.order(); ++e) {
      if (e == group.identity_index()) continue;
      ModuleVector image = apply_to_vector(group[e], v);
      if (image == v) continue;
      Membership m = membership(image, p, pad_limit);
      if (!m.in()) result.violations.push_back({gi, e, std::move(image), m});
    }
  }
  return result;
}

bool is_whole_module(const ModulePresentation& p, std::int64_t pad_limit) {
  for (std::size_t j = 0; j < p.k; ++j) {
    ModuleVector unit(p.n, p.k, p.conductor);
    unit[j].add_term(Exponent::zero(p.n), Cyclotomic::one(p.conductor));
    if (!membership(unit, p, pad_limit).in()) return false;
  }
  return true;
}

std::string SymDimVerdict::to_string() const {
  switch (kind) {
    case Kind::Stabilized: return "Stabilized(" + std::to_string(value) + ")";
    case Kind::Growing: return "Growing";
    case Kind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

SymDimReport symmetric_dimension(const ModulePresentation& p, const GroupTable& group,
                                 const WindowSchedule& schedule) {
  p.validate();
  if (schedule.radii.empty()) throw Error(ErrorKind::Validation, "empty window schedule");
  SymDimReport report;
  const int conductor = p.conductor;
  for (std::int64_t radius : schedule.radii) {
    Window w = orbit_close(ball_window(p.n, radius, schedule.norm), group);
    auto basis = std::make_shared<const WindowBasis>(w, p.k);
    SubspaceBasis whole = SubspaceBasis::full(basis, conductor);
    StabilizedSpace sub = stabilize_submodule_window(p, w, schedule.pads, group);

    SymDimEntry entry;
    entry.radius = radius;
    entry.label = "W_" + std::to_string(radius);
    entry.window_points = w.size();
    entry.dim_window = whole.dimension();
    entry.dim_submodule = sub.space.dimension();
    Cyclotomic sum_w = Cyclotomic::zero(conductor), sum_p = Cyclotomic::zero(conductor);
    for (const auto& g : group.elements()) {
      entry.window_characters.push_back(character(g, whole));
      entry.submodule_characters.push_back(character(g, sub.space));
      sum_w += entry.window_characters.back();
      sum_p += entry.submodule_characters.back();
    }
    entry.dim_window_fixed = average_to_dimension(sum_w, group.order());
    entry.dim_submodule_fixed = average_to_dimension(sum_p, group.order());
    if (entry.dim_submodule_fixed > entry.dim_window_fixed)
      throw Error(ErrorKind::NonIntegralCharacterSum, "fixed submodule larger than fixed window");
    entry.quotient_dim = entry.dim_window_fixed - entry.dim_submodule_fixed;
    entry.quotient_reynolds = quotient_reynolds_rank(group, sub.space);
    entry.pad_used = sub.pad_used;
    entry.pad_stable = sub.stable;
    if (entry.quotient_reynolds != entry.quotient_dim)
      report.notes.push_back(entry.label + ": subtraction formula gives " + std::to_string(entry.quotient_dim) +
                             " but the induced projector has rank " + std::to_string(entry.quotient_reynolds));
    if (!sub.stable) report.notes.push_back(entry.label + ": pad schedule did not stabilize");
    report.schedule.push_back(std::move(entry));
  }

  const std::int64_t pad_limit = schedule.pads.empty() ? 0 : schedule.pads.back();
  report.improper = is_whole_module(p, std::max<std::int64_t>(pad_limit, 2));
  const auto& s = report.schedule;
  const std::size_t runs = std::max<std::size_t>(schedule.stability_runs, 1);
  if (report.improper) {
    report.verdict = {SymDimVerdict::Kind::Stabilized, 0};
    report.notes.push_back("improper module: P = A^k, there are no nonzero solutions");
  } else {
    bool growing = s.size() >= 2;
    for (std::size_t i = 1; i < s.size(); ++i)
      growing = growing && s[i].quotient_dim > s[i - 1].quotient_dim;
    bool stabilized = s.size() >= runs;
    for (std::size_t i = s.size() - std::min(runs, s.size()); stabilized && i < s.size(); ++i)
      stabilized = s[i].pad_stable && s[i].quotient_dim == s.back().quotient_dim;
    if (stabilized)
      report.verdict = {SymDimVerdict::Kind::Stabilized, s.back().quotient_dim};
    else if (growing)
      report.verdict = {SymDimVerdict::Kind::Growing, 0};
  }
  report.notes.push_back("verdict is window evidence: the index where W^G stops growing is not certified");
  return report;
}

}  // namespace symlat
