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

#include "symlat/windows.hpp"

#include <algorithm>
#include <deque>

namespace symlat {

std::string_view to_string(Norm norm) { return norm == Norm::L1 ? "l1" : "linf"; }

Norm parse_norm(std::string_view text) {
  if (text == "l1") return Norm::L1;
  if (text == "linf") return Norm::Linf;
  throw Error(ErrorKind::Parse, "unknown norm '" + std::string(text) + "' (expected l1 or linf)");
}

Window::Window(std::size_t n, std::set<Exponent> points, Norm norm)
    : n_(n), points_(std::move(points)), norm_(norm) {
  for (const auto& x : points_)
    if (x.size() != n_) throw Error(ErrorKind::DimensionMismatch, "window point " + x.to_string());
}

bool Window::contains(const Window& other) const {
  return std::includes(points_.begin(), points_.end(), other.points_.begin(), other.points_.end());
}

namespace {

void enumerate_ball(std::size_t n, std::int64_t radius, Norm norm, Exponent& cur, std::size_t i,
                    std::int64_t used, std::set<Exponent>& out) {
  if (i == n) {
    out.insert(cur);
    return;
  }
  std::int64_t budget = norm == Norm::L1 ? radius - used : radius;
  for (std::int64_t v = -budget; v <= budget; ++v) {
    cur[i] = v;
    enumerate_ball(n, radius, norm, cur, i + 1, used + (v < 0 ? -v : v), out);
  }
  cur[i] = 0;
}

}  // namespace

Window ball_window(std::size_t n, std::int64_t radius, Norm norm) {
  if (radius < 0) throw Error(ErrorKind::Validation, "negative window radius");
  std::set<Exponent> pts;
  Exponent cur = Exponent::zero(n);
  enumerate_ball(n, radius, norm, cur, 0, 0, pts);
  return Window(n, std::move(pts), norm);
}

Window Window::dilated(std::int64_t pad) const {
  if (pad <= 0) return *this;
  Window ball = ball_window(n_, pad, norm_);
  std::set<Exponent> pts;
  for (const auto& x : points_)
    for (const auto& y : ball.points()) pts.insert(x + y);
  return Window(n_, std::move(pts), norm_);
}

bool Window::is_closed_under(const GroupTable& group) const {
  for (const auto& g : group.elements())
    for (const auto& x : points_)
      if (!contains(apply_to_monomial(g, x).image)) return false;
  return true;
}

Window orbit_close(const Window& w, const GroupTable& group) {
  std::set<Exponent> pts = w.points();
  std::deque<Exponent> todo(pts.begin(), pts.end());
  while (!todo.empty()) {
    Exponent x = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : group.elements()) {
      Exponent y = apply_to_monomial(g, x).image;
      if (pts.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return Window(w.dimension(), std::move(pts), w.norm());
}

Window bounding_box(std::size_t n, const std::set<Exponent>& points) {
  if (points.empty()) return Window(n, {Exponent::zero(n)});
  Exponent lo = *points.begin(), hi = lo;
  for (const auto& x : points)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }
  std::set<Exponent> pts;
  Exponent cur = lo;
  while (true) {
    pts.insert(cur);
    std::size_t i = n;
    while (i-- > 0) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return Window(n, std::move(pts), Norm::Linf);
}

// ---------------------------------------------------------------------------

WindowBasis::WindowBasis(const Window& window, std::size_t k) : window_(window), k_(k) {
  entries_.reserve(k * window.size());
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& x : window.points()) {
      index_.emplace(ModuleCoord{j, x}, entries_.size());
      entries_.emplace_back(j, x);
    }
}

std::optional<std::size_t> WindowBasis::index_of(const ModuleCoord& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector WindowBasis::coordinates(const ModuleVector& v) const {
  std::vector<std::pair<std::size_t, Cyclotomic>> out;
  for (std::size_t j = 0; j < v.rank(); ++j)
    for (const auto& [x, c] : v[j].terms()) {
      auto idx = index_of(j, x);
      if (!idx)
        throw Error(ErrorKind::NotClosed, "vector supported at " + x.to_string() + " outside the window");
      out.emplace_back(*idx, c);
    }
  return sparse_from_pairs(std::move(out));
}

ModuleVector WindowBasis::to_vector(const SparseVector& coords, int conductor) const {
  ModuleVector v(window_.dimension(), k_, conductor);
  for (const auto& [i, c] : coords) v[entries_[i].first].add_term(entries_[i].second, c);
  return v;
}

SubspaceBasis::SubspaceBasis(std::shared_ptr<const WindowBasis> basis, EchelonForm form)
    : basis_(std::move(basis)), form_(std::move(form)) {
  if (form_.columns() != basis_->size())
    throw Error(ErrorKind::DimensionMismatch, "echelon form does not match the window basis");
}

SubspaceBasis SubspaceBasis::full(std::shared_ptr<const WindowBasis> basis, int conductor) {
  EchelonForm form(basis->size(), conductor);
  for (std::size_t i = 0; i < basis->size(); ++i)
    form.insert(SparseVector{{i, Cyclotomic::one(conductor)}});
  return SubspaceBasis(std::move(basis), std::move(form));
}

// ---------------------------------------------------------------------------

SparseVector MonomialMatrix::apply(const SparseVector& v) const {
  std::vector<std::pair<std::size_t, Cyclotomic>> out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) out.emplace_back(columns_[i].row, columns_[i].value * c);
  return sparse_from_pairs(std::move(out));
}

Cyclotomic MonomialMatrix::trace(int conductor) const {
  Cyclotomic t = Cyclotomic::zero(conductor);
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].row == i) t += columns_[i].value;
  return t;
}

MonomialMatrix MonomialMatrix::then_after(const MonomialMatrix& other) const {
  std::vector<Column> cols;
  cols.reserve(other.size());
  for (const auto& c : other.columns_)
    cols.push_back({columns_[c.row].row, columns_[c.row].value * c.value});
  return MonomialMatrix(std::move(cols));
}

std::vector<std::vector<Cyclotomic>> MonomialMatrix::dense(int conductor) const {
  std::vector<std::vector<Cyclotomic>> m(size(), std::vector<Cyclotomic>(size(), Cyclotomic::zero(conductor)));
  for (std::size_t j = 0; j < size(); ++j) m[columns_[j].row][j] = columns_[j].value;
  return m;
}

bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.columns_[i].row != b.columns_[i].row || !(a.columns_[i].value == b.columns_[i].value))
      return false;
  return true;
}

MonomialMatrix group_matrix(const AutElement& g, const WindowBasis& basis) {
  std::vector<MonomialMatrix::Column> cols;
  cols.reserve(basis.size());
  for (const auto& [j, x] : basis.entries()) {
    auto img = apply_to_monomial(g, x);
    auto row = basis.index_of(j, img.image);
    if (!row)
      throw Error(ErrorKind::NotClosed, "window is not closed under " + g.to_string() + ": " +
                                            x.to_string() + " maps to " + img.image.to_string());
    cols.push_back({*row, std::move(img.coeff)});
  }
  return MonomialMatrix(std::move(cols));
}

ModulePresentation close_generators(const ModulePresentation& p, const GroupTable& group) {
  ModulePresentation out = p;
  out.generators.clear();
  std::vector<ModuleVector> seen;
  for (const auto& v : p.generators)
    for (const auto& g : group.elements()) {
      ModuleVector image = apply_to_vector(g, v);
      if (std::find(seen.begin(), seen.end(), image) == seen.end()) seen.push_back(image);
    }
  out.generators = std::move(seen);
  return out;
}

namespace {

SubspaceBasis window_space_impl(const ModulePresentation& p, const Window& w, const Window& outer) {
  // Coordinates of outer^k with the points outside w listed first. The RREF
  // rows whose pivot lies in the inner block then span exactly the part of
  // the span supported in w.
  std::vector<ModuleCoord> order;
  std::map<ModuleCoord, std::size_t> index;
  for (int inner = 0; inner < 2; ++inner)
    for (std::size_t j = 0; j < p.k; ++j)
      for (const auto& x : outer.points())
        if (w.contains(x) == (inner == 1)) {
          index.emplace(ModuleCoord{j, x}, order.size());
          order.emplace_back(j, x);
        }
  std::size_t outside = 0;
  while (outside < order.size() && !w.contains(order[outside].second)) ++outside;

  EchelonForm span(order.size(), p.conductor);
  for (const auto& v : p.nonzero_generators()) {
    auto supp = support(v);
    const Exponent anchor = supp.begin()->second;
    for (const auto& target : outer.points()) {
      Exponent shift = target - anchor;
      bool inside = std::all_of(supp.begin(), supp.end(),
                                [&](const ModuleCoord& c) { return outer.contains(c.second + shift); });
      if (!inside) continue;
      std::vector<std::pair<std::size_t, Cyclotomic>> coords;
      for (std::size_t j = 0; j < v.rank(); ++j)
        for (const auto& [x, c] : v[j].terms()) coords.emplace_back(index.at({j, x + shift}), c);
      span.insert(sparse_from_pairs(std::move(coords)));
    }
  }

  auto basis = std::make_shared<const WindowBasis>(w, p.k);
  EchelonForm restricted(basis->size(), p.conductor);
  for (const auto& [pivot, row] : span.rows()) {
    if (pivot < outside) continue;
    std::vector<std::pair<std::size_t, Cyclotomic>> coords;
    for (const auto& [i, c] : row) coords.emplace_back(*basis->index_of(order[i]), c);
    restricted.insert(sparse_from_pairs(std::move(coords)));
  }
  return SubspaceBasis(std::move(basis), std::move(restricted));
}

}  // namespace

SubspaceBasis submodule_window_space(const ModulePresentation& p, const Window& w, std::int64_t pad) {
  if (pad < 0) throw Error(ErrorKind::Validation, "negative pad");
  p.validate();
  return window_space_impl(p, w, w.dilated(pad));
}

SubspaceBasis submodule_window_space(const ModulePresentation& p, const Window& w, std::int64_t pad,
                                     const GroupTable& group) {
  if (pad < 0) throw Error(ErrorKind::Validation, "negative pad");
  p.validate();
  return window_space_impl(close_generators(p, group), w, orbit_close(w.dilated(pad), group));
}

namespace {

template <class Compute>
StabilizedSpace stabilize_impl(const std::vector<std::int64_t>& schedule, Compute compute) {
  if (schedule.empty()) throw Error(ErrorKind::Validation, "empty pad schedule");
  std::vector<std::pair<std::int64_t, std::size_t>> history;
  std::optional<SubspaceBasis> prev;
  std::int64_t prev_pad = schedule.front();
  for (std::int64_t pad : schedule) {
    SubspaceBasis cur = compute(pad);
    history.emplace_back(pad, cur.dimension());
    if (prev && prev->dimension() == cur.dimension())
      return {std::move(*prev), prev_pad, true, std::move(history)};
    prev = std::move(cur);
    prev_pad = pad;
  }
  return {std::move(*prev), prev_pad, false, std::move(history)};
}

}  // namespace

StabilizedSpace stabilize_submodule_window(const ModulePresentation& p, const Window& w,
                                           const std::vector<std::int64_t>& pad_schedule) {
  return stabilize_impl(pad_schedule, [&](std::int64_t pad) { return submodule_window_space(p, w, pad); });
}

StabilizedSpace stabilize_submodule_window(const ModulePresentation& p, const Window& w,
                                           const std::vector<std::int64_t>& pad_schedule,
                                           const GroupTable& group) {
  return stabilize_impl(pad_schedule,
                        [&](std::int64_t pad) { return submodule_window_space(p, w, pad, group); });
}

// ---------------------------------------------------------------------------

namespace {

// Univariate polynomial over Q(zeta_N), constant term first.
using UPoly = std::vector<Cyclotomic>;

UPoly to_upoly(const LaurentPoly& p) {
  const std::int64_t low = p.terms().begin()->first[0];
  const std::int64_t high = p.terms().rbegin()->first[0];
  UPoly out(static_cast<std::size_t>(high - low + 1), Cyclotomic::zero(p.conductor()));
  for (const auto& [x, c] : p.terms()) out[static_cast<std::size_t>(x[0] - low)] = c;
  return out;
}

bool divides(const UPoly& d, UPoly a) {
  while (a.size() >= d.size()) {
    if (a.back().is_zero()) {
      a.pop_back();
      continue;
    }
    Cyclotomic q = a.back() / d.back();
    const std::size_t shift = a.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] -= q * d[i];
    a.pop_back();
  }
  return std::all_of(a.begin(), a.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

}  // namespace

std::optional<bool> principal_univariate_membership(const ModuleVector& v, const ModulePresentation& p) {
  auto gens = p.nonzero_generators();
  if (p.n != 1 || p.k != 1 || gens.size() != 1) return std::nullopt;
  if (v[0].is_zero()) return true;
  // Monomials are units, so (p) = (s^-low p) with a nonzero constant term,
  // which is coprime to s; divisibility in K[s] then decides membership.
  return divides(to_upoly(gens.front()[0]), to_upoly(v[0]));
}

Membership membership(const ModuleVector& v, const ModulePresentation& p, std::int64_t pad_limit) {
  p.validate();
  if (v.rank() != p.k) throw Error(ErrorKind::DimensionMismatch, "vector rank differs from the module rank");
  if (v.is_zero()) return {Membership::Kind::In, 0};
  std::set<Exponent> pts;
  for (const auto& [j, x] : support(v)) pts.insert(x);
  Window hull = bounding_box(p.n, pts);
  for (std::int64_t pad = 0; pad <= pad_limit; ++pad) {
    SubspaceBasis space = submodule_window_space(p, hull, pad);
    if (space.echelon().contains(space.window().coordinates(v))) return {Membership::Kind::In, pad};
  }
  auto exact = principal_univariate_membership(v, p);
  return {Membership::Kind::NotFoundUpTo, pad_limit, exact.has_value() && !*exact};
}

}  // namespace symlat
