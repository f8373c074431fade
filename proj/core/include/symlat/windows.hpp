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

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symlat/group.hpp"
#include "symlat/laurent.hpp"
#include "symlat/linalg.hpp"

namespace symlat {

enum class Norm { L1, Linf };

std::string_view to_string(Norm norm);
Norm parse_norm(std::string_view text);

/// Finite set of lattice points. The norm only decides how the window is
/// dilated when padding.
class Window {
 public:
  Window(std::size_t n, std::set<Exponent> points, Norm norm = Norm::Linf);

  std::size_t dimension() const { return n_; }
  Norm norm() const { return norm_; }
  const std::set<Exponent>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const Exponent& x) const { return points_.count(x) != 0; }
  bool contains(const Window& other) const;

  /// Minkowski sum with the ball of the given radius in this window's norm.
  Window dilated(std::int64_t pad) const;
  bool is_closed_under(const GroupTable& group) const;

  friend bool operator==(const Window& a, const Window& b) {
    return a.n_ == b.n_ && a.points_ == b.points_;
  }

 private:
  std::size_t n_;
  std::set<Exponent> points_;
  Norm norm_;
};

/// All x in Z^n with |x| <= radius.
Window ball_window(std::size_t n, std::int64_t radius, Norm norm);

/// Smallest superset of w closed under x -> M^T x for every g in G.
Window orbit_close(const Window& w, const GroupTable& group);

/// Axis-aligned bounding box of a nonempty point set (l-infinity norm).
Window bounding_box(std::size_t n, const std::set<Exponent>& points);

/// Coordinate basis (component, exponent) of W^k, ordered by component then
/// exponent.
class WindowBasis {
 public:
  WindowBasis(const Window& window, std::size_t k);

  const Window& window() const { return window_; }
  std::size_t rank() const { return k_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<ModuleCoord>& entries() const { return entries_; }
  const ModuleCoord& operator[](std::size_t i) const { return entries_[i]; }
  std::optional<std::size_t> index_of(const ModuleCoord& c) const;
  std::optional<std::size_t> index_of(std::size_t component, const Exponent& x) const {
    return index_of(ModuleCoord{component, x});
  }

  /// Coordinates of v; throws NotClosed if v is supported outside the window.
  SparseVector coordinates(const ModuleVector& v) const;
  ModuleVector to_vector(const SparseVector& coords, int conductor) const;

 private:
  Window window_;
  std::size_t k_;
  std::vector<ModuleCoord> entries_;
  std::map<ModuleCoord, std::size_t> index_;
};

/// A subspace of W^k given by its reduced echelon basis.
class SubspaceBasis {
 public:
  SubspaceBasis(std::shared_ptr<const WindowBasis> basis, EchelonForm form);

  const WindowBasis& window() const { return *basis_; }
  std::shared_ptr<const WindowBasis> window_ptr() const { return basis_; }
  const EchelonForm& echelon() const { return form_; }
  std::size_t dimension() const { return form_.rank(); }
  std::vector<SparseVector> vectors() const { return form_.row_list(); }
  int conductor() const { return form_.conductor(); }

  /// The whole of W^k.
  static SubspaceBasis full(std::shared_ptr<const WindowBasis> basis, int conductor);

 private:
  std::shared_ptr<const WindowBasis> basis_;
  EchelonForm form_;
};

/// Matrix of rho(g) on a window basis. Each column has exactly one nonzero
/// entry: column (j, x) carries coeff at row (j, M^T x).
class MonomialMatrix {
 public:
  struct Column {
    std::size_t row;
    Cyclotomic value;
  };

  explicit MonomialMatrix(std::vector<Column> columns) : columns_(std::move(columns)) {}

  std::size_t size() const { return columns_.size(); }
  const std::vector<Column>& columns() const { return columns_; }
  SparseVector apply(const SparseVector& v) const;
  Cyclotomic trace(int conductor) const;
  /// this * other
  MonomialMatrix then_after(const MonomialMatrix& other) const;
  std::vector<std::vector<Cyclotomic>> dense(int conductor) const;

  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b);

 private:
  std::vector<Column> columns_;
};

/// Throws NotClosed if the window is not closed under g's exponent map.
MonomialMatrix group_matrix(const AutElement& g, const WindowBasis& basis);

/// Generators of P together with their images under every element of G. For
/// a G-invariant P this presents the same module.
ModulePresentation close_generators(const ModulePresentation& p, const GroupTable& group);

/// Window approximation of P ∩ W^k: every c=1 shift of a generator whose
/// support lies in W+ (w dilated by pad, and orbit-closed when a group is
/// given) spans a subspace, and the vectors of that span supported in w are
/// returned.
SubspaceBasis submodule_window_space(const ModulePresentation& p, const Window& w,
                                     std::int64_t pad);
SubspaceBasis submodule_window_space(const ModulePresentation& p, const Window& w,
                                     std::int64_t pad, const GroupTable& group);

struct StabilizedSpace {
  SubspaceBasis space;
  std::int64_t pad_used;
  bool stable;
  /// (pad, dimension) for every pad that was evaluated.
  std::vector<std::pair<std::int64_t, std::size_t>> history;
};

/// Runs submodule_window_space over an increasing pad schedule and stops at
/// the first pad whose dimension equals the next one's (stable). Otherwise
/// the last pad's space is returned with stable = false.
StabilizedSpace stabilize_submodule_window(const ModulePresentation& p, const Window& w,
                                           const std::vector<std::int64_t>& pad_schedule);
StabilizedSpace stabilize_submodule_window(const ModulePresentation& p, const Window& w,
                                           const std::vector<std::int64_t>& pad_schedule,
                                           const GroupTable& group);

struct Membership {
  enum class Kind { In, NotFoundUpTo };
  Kind kind;
  /// The certifying pad for In, the limit searched for NotFoundUpTo.
  std::int64_t pad;
  /// Set when NotFoundUpTo is backed by an exact argument: for a principal
  /// submodule of A^1 over Z^1, v is reduced modulo the generator.
  bool disproved = false;

  bool in() const { return kind == Kind::In; }
};

/// Searches pads 0..pad_limit over the bounding box of support(v). In is a
/// certificate; NotFoundUpTo is one-sided unless `disproved` is set.
Membership membership(const ModuleVector& v, const ModulePresentation& p, std::int64_t pad_limit);

/// Exact membership for n = 1, k = 1 and a single nonzero generator; nullopt
/// when the presentation has another shape.
std::optional<bool> principal_univariate_membership(const ModuleVector& v,
                                                    const ModulePresentation& p);

}  // namespace symlat
