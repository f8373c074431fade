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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symlat/group.hpp"
#include "symlat/windows.hpp"

namespace symlat {

/// A function f in F^k restricted to a window, equivalently a functional on
/// W^k: f pairs with (q_1, ..., q_k) as f_1(q_1) + ... + f_k(q_k).
class WindowFunction {
 public:
  WindowFunction(std::shared_ptr<const WindowBasis> basis, std::vector<Cyclotomic> values);
  static WindowFunction from_sparse(std::shared_ptr<const WindowBasis> basis, const SparseVector& v,
                                    int conductor);

  const WindowBasis& window() const { return *basis_; }
  std::shared_ptr<const WindowBasis> window_ptr() const { return basis_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  int conductor() const { return values_.empty() ? 1 : values_.front().conductor(); }

  /// Value at (component, x); throws NotClosed outside the window.
  const Cyclotomic& value(std::size_t component, const Exponent& x) const;
  SparseVector as_sparse() const;

  /// Pairing with an element of A^k supported in the window.
  Cyclotomic pair(const ModuleVector& q) const;

  /// Restriction to a sub-window.
  WindowFunction restricted(std::shared_ptr<const WindowBasis> inner) const;

 private:
  std::shared_ptr<const WindowBasis> basis_;
  std::vector<Cyclotomic> values_;
};

/// n = 1 rendering of a component, e.g. "⋯ 0, -1, 0, 1̂, 0, -1, 0 ⋯" with
/// the value at the origin hatted. Requires the window to be an interval.
std::string render_sequence(const WindowFunction& f, std::size_t component = 0);

/// Basis (normalized RREF: first nonzero value 1) of the functionals on W^k
/// that vanish on P_W. These are the solutions of the equations whose
/// stencils fit in the window.
std::vector<WindowFunction> solution_space_on_window(const ModulePresentation& p, const Window& w,
                                                     std::int64_t pad);

/// One row f(j, y) * alpha - f(j, x) = 0 for every g and basis entry (j, x)
/// with g(s^x) = alpha s^y, i.e. f o rho(g) = f. Trivial rows are dropped.
std::vector<SparseVector> invariance_constraints(const GroupTable& group, const WindowBasis& basis);

/// Basis of the G-invariant functionals on W^k vanishing on P_W (computed
/// with the group-closed pad construction).
std::vector<WindowFunction> symmetric_solution_basis(const ModulePresentation& p, const GroupTable& group,
                                                     const Window& w, std::int64_t pad);

struct RestrictionResult {
  bool consistent;
  std::size_t dim_inner;
  std::size_t dim_restricted;
};

/// Restricts the outer basis to w_inner and compares spans with the inner
/// basis. Drop(dim_inner, dim_restricted) is reported as consistent = false.
RestrictionResult restriction_consistency(const std::vector<WindowFunction>& inner,
                                          const std::vector<WindowFunction>& outer, const Window& w_inner);

struct AllSymmetricResult {
  bool holds = true;
  std::size_t checked = 0;
  /// First failing sample: the exponent tuple (x^1, ..., x^k) and group index.
  std::vector<Exponent> tuple;
  std::size_t element = 0;
  /// The failing membership was decided exactly (principal, n = 1).
  bool exact = false;
};

/// For every g and every tuple drawn from the sample window, tests
/// (s^{x1} - g s^{x1}, ..., s^{xk} - g s^{xk}) in P. Holds is evidence on
/// the samples only. Samples are visited by increasing l1 norm.
AllSymmetricResult all_solutions_symmetric_check(const ModulePresentation& p, const GroupTable& group,
                                                 const Window& sample_window, std::int64_t pad_limit);

}  // namespace symlat
