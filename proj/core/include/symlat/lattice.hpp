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
#include <optional>
#include <string>
#include <vector>

#include "symlat/group.hpp"
#include "symlat/windows.hpp"

namespace symlat {

/// Column Hermite normal form: columns of the result generate the same
/// lattice as the columns of `generators` (an n x m matrix given row-major).
/// Nonzero columns come first, each with a positive pivot strictly below the
/// previous pivot, and entries left of a pivot reduced into [0, pivot).
IntMatrix column_hnf(const IntMatrix& generators, std::size_t rows);

/// Basis of {y in Z^m : A y = 0} for an r x m integer matrix A.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t columns);

class Sublattice {
 public:
  /// Any generating set (columns of an n x m matrix); stored in HNF.
  Sublattice(std::size_t n, const IntMatrix& generators);

  std::size_t dimension() const { return n_; }
  std::size_t rank() const { return rank_; }
  /// n x rank, row-major.
  const IntMatrix& basis() const { return basis_; }
  Exponent column(std::size_t i) const;
  /// |det basis| for full rank, nullopt ("infinite") otherwise.
  std::optional<std::int64_t> index() const;
  bool contains(const Exponent& x) const;
  std::string to_string() const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t n_;
  std::size_t rank_ = 0;
  IntMatrix basis_;
};

/// {x : coefficient_character(g, x) = 1 for all g}. Every homothety entry
/// must be a root of unity, otherwise NonTorsionCoefficient.
Sublattice invariant_sublattice(const GroupTable& group);

/// Throws NotFullRank for rank < n.
std::int64_t sublattice_index(const Sublattice& s);

/// The part of P_w (at the given pad) supported on exponents in S.
SubspaceBasis contract(const ModulePresentation& p, const Sublattice& s, const Window& w, std::int64_t pad);

struct OrbitDecomposition {
  /// Sorted points per orbit; orbits sorted by their first point.
  std::vector<std::vector<Exponent>> orbits;
  /// Averaged image of the orbit's first point, scaled so that its first
  /// entry is 1; empty when a homothety kills it.
  std::vector<std::vector<std::pair<Exponent, Cyclotomic>>> fixed_vectors;

  std::optional<std::size_t> orbit_of(const Exponent& x) const;
};

OrbitDecomposition orbit_decomposition(const GroupTable& group, const Window& w);

struct ProjectionCheck {
  bool covered;
  /// First failure: orbit index into the decomposition of w, and component.
  std::size_t orbit = 0;
  std::size_t component = 0;
};

/// Window-level evidence for the orbit criterion: every invariant vector of
/// every non-excluded orbit (in every component) lies in the projection of
/// P_w onto the non-excluded coordinates. Orbits are excluded by naming any
/// of their points.
ProjectionCheck orbit_projection_check(const ModulePresentation& p, const GroupTable& group, const Window& w,
                                       const std::vector<Exponent>& excluded, std::int64_t pad);

}  // namespace symlat
