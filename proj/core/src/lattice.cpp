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

#include "symlat/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>

namespace symlat {

namespace {

using BigMatrix = std::vector<std::vector<mpz_class>>;

BigMatrix to_big(const IntMatrix& a) {
  BigMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (auto v : a[i]) out[i].emplace_back(static_cast<long>(v));
  return out;
}

std::int64_t to_int(const mpz_class& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::Validation, "lattice entry exceeds 64 bits");
  return v.get_si();
}

void column_combine(BigMatrix& m, std::size_t p, std::size_t c, const mpz_class& s, const mpz_class& t,
                    const mpz_class& u, const mpz_class& v) {
  // (col p, col c) <- (s*p + t*c, u*p + v*c)
  for (auto& row : m) {
    mpz_class a = row[p], b = row[c];
    row[p] = s * a + t * b;
    row[c] = u * a + v * b;
  }
}

// Column-reduces the first `top` rows into Hermite form using unimodular
// column operations on all rows. Returns the number of pivot columns, which
// come first; the remaining columns vanish on the top rows.
std::size_t hnf_in_place(BigMatrix& m, std::size_t top) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  std::size_t p = 0;
  for (std::size_t r = 0; r < top && p < cols; ++r) {
    for (std::size_t c = p + 1; c < cols; ++c) {
      if (m[r][c] == 0) continue;
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[r][p].get_mpz_t(), m[r][c].get_mpz_t());
      mpz_class a = m[r][p] / g, b = m[r][c] / g;
      column_combine(m, p, c, s, t, -b, a);
    }
    if (m[r][p] == 0) continue;
    if (m[r][p] < 0)
      for (auto& row : m) row[p] = -row[p];
    for (std::size_t q = 0; q < p; ++q) {
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), m[r][q].get_mpz_t(), m[r][p].get_mpz_t());
      if (f != 0)
        for (auto& row : m) row[q] -= f * row[p];
    }
    ++p;
  }
  return p;
}

}  // namespace

IntMatrix column_hnf(const IntMatrix& generators, std::size_t rows) {
  if (generators.size() != rows) throw Error(ErrorKind::DimensionMismatch, "generator matrix has wrong height");
  BigMatrix m = to_big(generators);
  std::size_t rank = hnf_in_place(m, rows);
  IntMatrix out(rows, std::vector<std::int64_t>(rank));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rank; ++j) out[i][j] = to_int(m[i][j]);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t columns) {
  const std::size_t r = a.size();
  BigMatrix m = to_big(a);
  for (std::size_t i = 0; i < columns; ++i) {
    m.emplace_back(columns, mpz_class(0));
    m.back()[i] = 1;
  }
  std::size_t rank = hnf_in_place(m, r);
  IntMatrix kernel(columns, std::vector<std::int64_t>(columns - rank));
  for (std::size_t i = 0; i < columns; ++i)
    for (std::size_t j = rank; j < columns; ++j) kernel[i][j - rank] = to_int(m[r + i][j]);
  return kernel;
}

Sublattice::Sublattice(std::size_t n, const IntMatrix& generators) : n_(n) {
  basis_ = column_hnf(generators, n);
  rank_ = n == 0 ? 0 : basis_.front().size();
}

Exponent Sublattice::column(std::size_t i) const {
  std::vector<std::int64_t> c(n_);
  for (std::size_t r = 0; r < n_; ++r) c[r] = basis_[r][i];
  return Exponent(std::move(c));
}

std::optional<std::int64_t> Sublattice::index() const {
  if (rank_ < n_) return std::nullopt;
  // Full-rank column HNF is lower triangular.
  mpz_class det = 1;
  for (std::size_t i = 0; i < n_; ++i) det *= basis_[i][i];
  return to_int(det);
}

bool Sublattice::contains(const Exponent& x) const {
  if (x.size() != n_) throw Error(ErrorKind::DimensionMismatch, "point and sublattice dimensions differ");
  std::vector<mpz_class> rest;
  for (std::size_t i = 0; i < n_; ++i) rest.emplace_back(static_cast<long>(x[i]));
  std::size_t col = 0;
  for (std::size_t r = 0; r < n_; ++r) {
    if (col < rank_ && basis_[r][col] != 0) {
      mpz_class piv = static_cast<long>(basis_[r][col]);
      if (!mpz_divisible_p(rest[r].get_mpz_t(), piv.get_mpz_t())) return false;
      mpz_class f = rest[r] / piv;
      for (std::size_t i = r; i < n_; ++i) rest[i] -= f * static_cast<long>(basis_[i][col]);
      ++col;
    } else if (rest[r] != 0) {
      return false;
    }
  }
  return true;
}

std::string Sublattice::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < n_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < rank_; ++c) out += (c ? ", " : "") + std::to_string(basis_[r][c]);
    out += "]";
  }
  out += "] index ";
  auto idx = index();
  return out + (idx ? std::to_string(*idx) : "infinite");
}

Sublattice invariant_sublattice(const GroupTable& group) {
  const std::size_t n = group.dimension();
  const std::int64_t L = roots_of_unity_order(group.conductor());
  // Rows: a_g with r^g_i = zeta_L^{a_gi}; the condition is <a_g, x> = 0 mod L.
  // Kernel of [A | L*I] projected to x.
  IntMatrix rows;
  for (const auto& g : group.elements()) {
    std::vector<std::int64_t> a(n);
    bool trivial = true;
    for (std::size_t i = 0; i < n; ++i) {
      auto e = root_of_unity_exponent(g.homothety_part()[i]);
      if (!e)
        throw Error(ErrorKind::NonTorsionCoefficient,
                    "homothety entry " + g.homothety_part()[i].to_string() + " of " + g.to_string() +
                        " is not a root of unity");
      a[i] = *e;
      trivial = trivial && *e == 0;
    }
    if (!trivial) rows.push_back(std::move(a));
  }
  if (rows.empty()) return Sublattice(n, identity_matrix(n));
  const std::size_t m = rows.size();
  for (std::size_t j = 0; j < m; ++j) {
    rows[j].resize(n + m, 0);
    rows[j][n + j] = L;
  }
  IntMatrix kernel = integer_kernel(rows, n + m);
  kernel.resize(n);
  return Sublattice(n, kernel);
}

std::int64_t sublattice_index(const Sublattice& s) {
  auto idx = s.index();
  if (!idx)
    throw Error(ErrorKind::NotFullRank,
                "sublattice of rank " + std::to_string(s.rank()) + " in Z^" + std::to_string(s.dimension()));
  return *idx;
}

namespace {

// Intersection of the span of `sub` with the coordinates where `keep` holds,
// via the outside-first RREF.
EchelonForm restrict_to(const SubspaceBasis& sub, const std::vector<bool>& keep) {
  const std::size_t size = keep.size();
  std::vector<std::size_t> to_perm(size), from_perm;
  for (int inner = 0; inner < 2; ++inner)
    for (std::size_t i = 0; i < size; ++i)
      if (keep[i] == (inner == 1)) {
        to_perm[i] = from_perm.size();
        from_perm.push_back(i);
      }
  const std::size_t outside = static_cast<std::size_t>(std::count(keep.begin(), keep.end(), false));
  EchelonForm permuted(size, sub.conductor());
  for (const auto& row : sub.vectors()) {
    std::vector<std::pair<std::size_t, Cyclotomic>> coords;
    for (const auto& [i, c] : row) coords.emplace_back(to_perm[i], c);
    permuted.insert(sparse_from_pairs(std::move(coords)));
  }
  EchelonForm out(size, sub.conductor());
  for (const auto& [pivot, row] : permuted.rows()) {
    if (pivot < outside) continue;
    std::vector<std::pair<std::size_t, Cyclotomic>> coords;
    for (const auto& [i, c] : row) coords.emplace_back(from_perm[i], c);
    out.insert(sparse_from_pairs(std::move(coords)));
  }
  return out;
}

}  // namespace

SubspaceBasis contract(const ModulePresentation& p, const Sublattice& s, const Window& w, std::int64_t pad) {
  if (s.rank() < s.dimension()) throw Error(ErrorKind::NotFullRank, "contraction needs a full-rank sublattice");
  SubspaceBasis sub = submodule_window_space(p, w, pad);
  const auto& basis = sub.window();
  std::vector<bool> keep(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) keep[i] = s.contains(basis[i].second);
  return SubspaceBasis(sub.window_ptr(), restrict_to(sub, keep));
}

std::optional<std::size_t> OrbitDecomposition::orbit_of(const Exponent& x) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (std::binary_search(orbits[i].begin(), orbits[i].end(), x)) return i;
  return std::nullopt;
}

OrbitDecomposition orbit_decomposition(const GroupTable& group, const Window& w) {
  if (!w.is_closed_under(group)) throw Error(ErrorKind::NotClosed, "window is not closed under the group");
  OrbitDecomposition out;
  std::set<Exponent> seen;
  // Window points are visited in sorted order, so the orbits come out sorted
  // by their least point.
  for (const auto& x : w.points()) {
    if (seen.count(x)) continue;
    std::map<Exponent, Cyclotomic> average;
    for (const auto& g : group.elements()) {
      auto img = apply_to_monomial(g, x);
      seen.insert(img.image);
      auto [it, fresh] = average.try_emplace(img.image, img.coeff);
      if (!fresh) it->second += img.coeff;
    }
    std::vector<Exponent> orbit;
    std::vector<std::pair<Exponent, Cyclotomic>> fixed;
    for (const auto& [y, c] : average) {
      orbit.push_back(y);
      if (!c.is_zero()) fixed.emplace_back(y, c);
    }
    if (!fixed.empty()) {
      Cyclotomic lead = inv(fixed.front().second);
      for (auto& [y, c] : fixed) c = c * lead;
    }
    out.orbits.push_back(std::move(orbit));
    out.fixed_vectors.push_back(std::move(fixed));
  }
  return out;
}

ProjectionCheck orbit_projection_check(const ModulePresentation& p, const GroupTable& group, const Window& w,
                                       const std::vector<Exponent>& excluded, std::int64_t pad) {
  OrbitDecomposition orbits = orbit_decomposition(group, w);
  std::vector<bool> dropped(orbits.orbits.size(), false);
  for (const auto& x : excluded) {
    auto o = orbits.orbit_of(x);
    if (!o) throw Error(ErrorKind::NotClosed, "excluded point " + x.to_string() + " is outside the window");
    dropped[*o] = true;
  }
  SubspaceBasis sub = submodule_window_space(p, w, pad, group);
  const auto& basis = sub.window();
  std::vector<bool> keep(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) keep[i] = !dropped[*orbits.orbit_of(basis[i].second)];

  EchelonForm projection(basis.size(), p.conductor);
  for (const auto& row : sub.vectors()) {
    SparseVector kept;
    for (const auto& [i, c] : row)
      if (keep[i]) kept.emplace_back(i, c);
    projection.insert(kept);
  }
  for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
    if (dropped[o] || orbits.fixed_vectors[o].empty()) continue;
    for (std::size_t j = 0; j < p.k; ++j) {
      std::vector<std::pair<std::size_t, Cyclotomic>> coords;
      for (const auto& [y, c] : orbits.fixed_vectors[o]) coords.emplace_back(*basis.index_of(j, y), c);
      if (!projection.contains(sparse_from_pairs(std::move(coords)))) return {false, o, j};
    }
  }
  return {true};
}

}  // namespace symlat
