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

#include "symlat/solutions.hpp"

#include <algorithm>
#include <functional>

namespace symlat {

WindowFunction::WindowFunction(std::shared_ptr<const WindowBasis> basis, std::vector<Cyclotomic> values)
    : basis_(std::move(basis)), values_(std::move(values)) {
  if (values_.size() != basis_->size())
    throw Error(ErrorKind::DimensionMismatch, "function values do not match the window basis");
}

WindowFunction WindowFunction::from_sparse(std::shared_ptr<const WindowBasis> basis, const SparseVector& v,
                                           int conductor) {
  std::vector<Cyclotomic> values(basis->size(), Cyclotomic::zero(conductor));
  for (const auto& [i, c] : v) values[i] = c;
  return WindowFunction(std::move(basis), std::move(values));
}

const Cyclotomic& WindowFunction::value(std::size_t component, const Exponent& x) const {
  auto idx = basis_->index_of(component, x);
  if (!idx) throw Error(ErrorKind::NotClosed, x.to_string() + " is outside the function's window");
  return values_[*idx];
}

SparseVector WindowFunction::as_sparse() const {
  SparseVector v;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!values_[i].is_zero()) v.emplace_back(i, values_[i]);
  return v;
}

Cyclotomic WindowFunction::pair(const ModuleVector& q) const {
  return sparse_dot(as_sparse(), basis_->coordinates(q), conductor());
}

WindowFunction WindowFunction::restricted(std::shared_ptr<const WindowBasis> inner) const {
  std::vector<Cyclotomic> values;
  values.reserve(inner->size());
  for (const auto& [j, x] : inner->entries()) values.push_back(value(j, x));
  return WindowFunction(std::move(inner), std::move(values));
}

std::string render_sequence(const WindowFunction& f, std::size_t component) {
  const auto& w = f.window().window();
  if (w.dimension() != 1) throw Error(ErrorKind::DimensionMismatch, "sequence rendering needs n = 1");
  std::string out = "⋯ ";
  bool first = true;
  for (const auto& x : w.points()) {
    if (!first) out += ", ";
    first = false;
    out += f.value(component, x).to_string();
    if (x[0] == 0) out += "̂";
  }
  return out + " ⋯";
}

namespace {

std::vector<WindowFunction> to_functions(std::shared_ptr<const WindowBasis> basis,
                                         const std::vector<SparseVector>& vs, int conductor) {
  std::vector<WindowFunction> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(WindowFunction::from_sparse(basis, v, conductor));
  return out;
}

}  // namespace

std::vector<WindowFunction> solution_space_on_window(const ModulePresentation& p, const Window& w,
                                                     std::int64_t pad) {
  SubspaceBasis sub = submodule_window_space(p, w, pad);
  return to_functions(sub.window_ptr(), sub.echelon().nullspace(), p.conductor);
}

std::vector<SparseVector> invariance_constraints(const GroupTable& group, const WindowBasis& basis) {
  std::vector<SparseVector> rows;
  const int conductor = group.conductor();
  for (const auto& g : group.elements()) {
    if (g.is_identity()) continue;
    MonomialMatrix m = group_matrix(g, basis);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& col = m.columns()[i];
      SparseVector row = sparse_from_pairs({{col.row, col.value}, {i, -Cyclotomic::one(conductor)}});
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<WindowFunction> symmetric_solution_basis(const ModulePresentation& p, const GroupTable& group,
                                                     const Window& w, std::int64_t pad) {
  if (!w.is_closed_under(group))
    throw Error(ErrorKind::NotClosed, "symmetric solutions need a G-closed window");
  SubspaceBasis sub = submodule_window_space(p, w, pad, group);
  EchelonForm system = sub.echelon();
  for (const auto& row : invariance_constraints(group, sub.window())) system.insert(row);
  return to_functions(sub.window_ptr(), system.nullspace(), p.conductor);
}

RestrictionResult restriction_consistency(const std::vector<WindowFunction>& inner,
                                          const std::vector<WindowFunction>& outer, const Window& w_inner) {
  std::size_t k = 1;
  int conductor = 1;
  if (!inner.empty()) {
    k = inner.front().window().rank();
    conductor = inner.front().conductor();
  } else if (!outer.empty()) {
    k = outer.front().window().rank();
    conductor = outer.front().conductor();
  }
  auto basis = std::make_shared<const WindowBasis>(w_inner, k);
  EchelonForm inner_span(basis->size(), conductor), restricted_span(basis->size(), conductor);
  for (const auto& f : inner) inner_span.insert(f.restricted(basis).as_sparse());
  for (const auto& f : outer) restricted_span.insert(f.restricted(basis).as_sparse());
  bool same = inner_span.rows() == restricted_span.rows();
  return {same, inner_span.rank(), restricted_span.rank()};
}

namespace {

void tuples(const std::vector<Exponent>& points, std::size_t k, std::vector<Exponent>& cur,
            const std::function<bool(const std::vector<Exponent>&)>& visit, bool& stop) {
  if (stop) return;
  if (cur.size() == k) {
    stop = !visit(cur);
    return;
  }
  for (const auto& x : points) {
    cur.push_back(x);
    tuples(points, k, cur, visit, stop);
    cur.pop_back();
    if (stop) return;
  }
}

}  // namespace

AllSymmetricResult all_solutions_symmetric_check(const ModulePresentation& p, const GroupTable& group,
                                                 const Window& sample_window, std::int64_t pad_limit) {
  p.validate();
  std::vector<Exponent> points(sample_window.points().begin(), sample_window.points().end());
  std::stable_sort(points.begin(), points.end(),
                   [](const Exponent& a, const Exponent& b) { return a.l1_norm() < b.l1_norm(); });
  AllSymmetricResult result;
  result.holds = true;
  std::vector<Exponent> cur;
  bool stop = false;
  for (std::size_t e = 0; e < group.order() && !stop; ++e) {
    if (e == group.identity_index()) continue;
    const auto& g = group[e];
    tuples(points, p.k, cur,
           [&](const std::vector<Exponent>& t) {
             ModuleVector diff(p.n, p.k, p.conductor);
             for (std::size_t j = 0; j < p.k; ++j) {
               diff[j].add_term(t[j], Cyclotomic::one(p.conductor));
               auto img = apply_to_monomial(g, t[j]);
               diff[j].add_term(img.image, -img.coeff);
             }
             ++result.checked;
             if (diff.is_zero()) return true;
             Membership m = membership(diff, p, pad_limit);
             if (m.in()) return true;
             result.holds = false;
             result.tuple = t;
             result.element = e;
             result.exact = m.disproved;
             return false;
           },
           stop);
  }
  return result;
}

}  // namespace symlat
