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
#include <string>
#include <vector>

#include "symlat/group.hpp"
#include "symlat/windows.hpp"

namespace symlat {

/// Trace of rho(g) restricted to S, in S's own coordinates. Throws
/// NotInvariant if g(S) is not contained in S.
Cyclotomic character(const AutElement& g, const SubspaceBasis& s);

/// dim S^G = (1/|G|) sum_g chi_S(g). Throws NonIntegralCharacterSum when the
/// average is not a nonnegative integer.
std::size_t fixed_dim_by_character(const GroupTable& group, const SubspaceBasis& s);

/// Image of the averaging projector (1/|G|) sum_g rho(g) on S.
SubspaceBasis reynolds_fixed_space(const GroupTable& group, const SubspaceBasis& s);

/// (1/|G|) sum_g rho(g) applied to a coordinate vector of the window.
SparseVector reynolds_average(const GroupTable& group, const std::vector<MonomialMatrix>& matrices,
                              const SparseVector& v);

/// Rank of the averaging projector induced on W / P_W, computed on the
/// complement spanned by the non-pivot coordinates of P_W's echelon form.
std::size_t quotient_reynolds_rank(const GroupTable& group, const SubspaceBasis& submodule);

struct InvarianceViolation {
  std::size_t generator;  // index into the presentation's generators
  std::size_t element;    // index into the group table
  ModuleVector image;
  Membership membership;
};

struct InvarianceResult {
  bool invariant() const { return violations.empty(); }
  std::vector<InvarianceViolation> violations;
};

/// Tests g(v) in P for every generator v and g in G. Finite order makes
/// g(P) ⊆ P for all g equivalent to g(P) = P.
InvarianceResult invariance_check(const ModulePresentation& p, const GroupTable& group,
                                  std::int64_t pad_limit);

struct WindowSchedule {
  std::vector<std::int64_t> radii;
  Norm norm = Norm::Linf;
  std::vector<std::int64_t> pads{0, 1, 2, 3};
  std::size_t stability_runs = 3;
};

struct SymDimEntry {
  std::int64_t radius;
  std::string label;
  std::size_t window_points;
  std::size_t dim_window;          // dim W^k
  std::size_t dim_window_fixed;    // dim (W^k)^G
  std::size_t dim_submodule;       // dim P_W
  std::size_t dim_submodule_fixed; // dim P_W^G
  std::size_t quotient_dim;        // dim (W^k / P_W)^G by subtraction
  std::size_t quotient_reynolds;   // same quantity via the induced projector
  std::vector<Cyclotomic> window_characters;     // chi_W(g), g in table order
  std::vector<Cyclotomic> submodule_characters;  // chi_{P_W}(g)
  std::int64_t pad_used;
  bool pad_stable;
};

struct SymDimVerdict {
  enum class Kind { Stabilized, Growing, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::size_t value = 0;  // the limit for Stabilized
  std::string to_string() const;
};

struct SymDimReport {
  std::vector<SymDimEntry> schedule;
  SymDimVerdict verdict;
  /// P = A^k; reported as Stabilized(0).
  bool improper = false;
  std::vector<std::string> notes;
};

/// Window-exhaustion estimate of dim Ker(P)^G. Each window is the
/// orbit-closed ball of the scheduled radius; the verdict is Stabilized(d)
/// when the last `stability_runs` quotient dimensions agree with stable
/// pads, Growing when they increase strictly throughout, and Inconclusive
/// otherwise. The verdict is heuristic and the report says so.
SymDimReport symmetric_dimension(const ModulePresentation& p, const GroupTable& group,
                                 const WindowSchedule& schedule);

/// True when every unit vector e_j lies in P (found within pad_limit).
bool is_whole_module(const ModulePresentation& p, std::int64_t pad_limit);

}  // namespace symlat
