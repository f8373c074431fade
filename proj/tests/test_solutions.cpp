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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "oracle/oracle.hpp"
#include "support.hpp"
#include "symlat/solutions.hpp"

namespace symlat {
namespace {

using testing::principal;
using testing::q;

bool in_span(const std::vector<WindowFunction>& basis, const WindowFunction& f) {
  EchelonForm e(f.window().size(), f.conductor());
  for (const auto& b : basis) e.insert(b.as_sparse());
  return e.contains(f.as_sparse());
}

WindowFunction pattern(const Window& w, int conductor, const std::function<std::int64_t(std::int64_t)>& value) {
  std::vector<Cyclotomic> values;
  for (const auto& x : w.points()) values.push_back(q(value(x[0]), conductor));
  return WindowFunction(std::make_shared<const WindowBasis>(w, 1), std::move(values));
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Every f satisfies the generator equations at points whose stencil fits in
// the window, and f o rho(g) = f.
void expect_symmetric_solution(const WindowFunction& f, const ModulePresentation& p, const GroupTable& group) {
  const Window& w = f.window().window();
  for (const auto& v : p.nonzero_generators()) {
    auto supp = support(v);
    for (const auto& y : w.points()) {
      Exponent shift = y - supp.begin()->second;
      bool fits = std::all_of(supp.begin(), supp.end(), [&](const ModuleCoord& c) { return w.contains(c.second + shift); });
      if (fits) EXPECT_TRUE(f.pair(monomial_shift(shift, Cyclotomic::one(p.conductor), v)).is_zero());
    }
  }
  for (const auto& g : group.elements())
    for (std::size_t j = 0; j < p.k; ++j)
      for (const auto& x : w.points()) {
        auto img = apply_to_monomial(g, x);
        EXPECT_EQ(img.coeff * f.value(j, img.image), f.value(j, x));
      }
}

TEST(SolutionSpace, Examples) {
  Window w4 = ball_window(1, 4, Norm::Linf);
  auto sols = solution_space_on_window(principal(1, "s1 + s1^-1"), w4, 1);
  EXPECT_EQ(sols.size(), 2u);
  EXPECT_TRUE(in_span(sols, pattern(w4, 1, [](std::int64_t x) { return x % 2 ? 0 : (mod(x, 4) == 0 ? 1 : -1); })));

  for (int d : {2, 3, 5}) {
    Window w = ball_window(1, 2 * d, Norm::Linf);
    auto s = solution_space_on_window(principal(1, "1 - s1^" + std::to_string(d)), w, d);
    EXPECT_EQ(s.size(), static_cast<std::size_t>(d));
    EXPECT_TRUE(in_span(s, pattern(w, 1, [d](std::int64_t x) { return mod(x, d) == 0 ? 1 : 0; })));
  }
  EXPECT_TRUE(solution_space_on_window(principal(1, "1"), w4, 0).empty());
}

TEST(SolutionSpace, NormalizedBasis) {
  auto sols = solution_space_on_window(principal(2, "s1 - s2 + 1/2"), ball_window(2, 2, Norm::Linf), 1);
  for (const auto& f : sols) {
    auto v = f.as_sparse();
    ASSERT_FALSE(v.empty());
    EXPECT_TRUE(v.front().second.is_one());
  }
}

TEST(InvarianceConstraints, Examples) {
  auto b = WindowBasis(ball_window(1, 3, Norm::Linf), 1);
  auto refl = invariance_constraints(testing::reflections(), b);
  EXPECT_EQ(echelon_of(b.size(), 1, refl).rank(), 3u);
  for (const auto& row : refl) {
    ASSERT_EQ(row.size(), 2u);
    EXPECT_EQ(b[row[0].first].second, -b[row[1].first].second);
    EXPECT_EQ(row[0].second, -row[1].second);
  }

  auto b2 = WindowBasis(ball_window(1, 3, Norm::Linf), 1);
  auto sign = invariance_constraints(testing::sign_homothety(), b2);
  EXPECT_EQ(sign.size(), 4u);
  for (const auto& row : sign) {
    ASSERT_EQ(row.size(), 1u);
    EXPECT_NE(b2[row[0].first].second[0] % 2, 0);
  }
  EXPECT_TRUE(invariance_constraints(testing::trivial_group(1), b).empty());
}

TEST(SymmetricSolutionBasis, Example1) {
  Window w4 = ball_window(1, 4, Norm::Linf);
  auto i = principal(1, "s1 + s1^-1");
  auto basis = symmetric_solution_basis(i, testing::reflections(), w4, 1);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(render_sequence(basis[0]), "⋯ 1, 0, -1, 0, 1̂, 0, -1, 0, 1 ⋯");
  expect_symmetric_solution(basis[0], i, testing::reflections());

  auto j = principal(1, "s1 - s1^-1");
  auto jb = symmetric_solution_basis(j, testing::reflections(), w4, 1);
  ASSERT_EQ(jb.size(), 2u);
  EXPECT_NE(render_sequence(jb[0]).find("0, 1, 0, 1̂, 0, 1, 0"), std::string::npos);
  EXPECT_NE(render_sequence(jb[1]).find("1, 0, 1, 0̂, 1, 0, 1"), std::string::npos);
  for (const auto& f : jb) expect_symmetric_solution(f, j, testing::reflections());
}

TEST(SymmetricSolutionBasis, Example2) {
  for (int d : {2, 3, 5}) {
    auto p = principal(1, "1 - s1^" + std::to_string(d), d);
    for (int r : {1, 2, 3}) {
      Window w = ball_window(1, r * d, Norm::Linf);
      auto basis = symmetric_solution_basis(p, testing::roots_of_unity(d), w, d);
      ASSERT_EQ(basis.size(), 1u);
      EXPECT_EQ(basis[0].values(), pattern(w, d, [d](std::int64_t x) { return mod(x, d) == 0 ? 1 : 0; }).values());
      expect_symmetric_solution(basis[0], p, testing::roots_of_unity(d));
    }
  }
}

TEST(SymmetricSolutionBasis, NeedsClosedWindow) {
  EXPECT_THROW(symmetric_solution_basis(principal(1, "s1 + s1^-1"), testing::reflections(), testing::interval(0, 3), 1),
               Error);
}

TEST(RestrictionConsistency, Examples) {
  auto i = principal(1, "s1 + s1^-1");
  auto g = testing::reflections();
  Window w4 = ball_window(1, 4, Norm::Linf);
  auto r = restriction_consistency(symmetric_solution_basis(i, g, w4, 1),
                                   symmetric_solution_basis(i, g, ball_window(1, 6, Norm::Linf), 1), w4);
  EXPECT_TRUE(r.consistent);
  EXPECT_EQ(r.dim_inner, 1u);

  for (int d : {2, 3, 5}) {
    auto p = principal(1, "1 - s1^" + std::to_string(d), d);
    Window inner = ball_window(1, 2 * d, Norm::Linf);
    auto rr = restriction_consistency(symmetric_solution_basis(p, testing::roots_of_unity(d), inner, d),
                                      symmetric_solution_basis(p, testing::roots_of_unity(d),
                                                               ball_window(1, 3 * d, Norm::Linf), d),
                                      inner);
    EXPECT_TRUE(rr.consistent) << d;
  }
  auto unit = principal(1, "1");
  auto ru = restriction_consistency(solution_space_on_window(unit, w4, 0),
                                    solution_space_on_window(unit, ball_window(1, 6, Norm::Linf), 0), w4);
  EXPECT_TRUE(ru.consistent);
  EXPECT_EQ(ru.dim_inner, 0u);

  // (s - 1, s - 2) is the whole ring: a one-point window sees no equation,
  // a larger window forces zero.
  ModulePresentation both{1, 1, 1, {testing::vec(1, {"s1 - 1"}), testing::vec(1, {"s1 - 2"})}};
  auto drop = restriction_consistency(solution_space_on_window(both, testing::interval(0, 0), 0),
                                      solution_space_on_window(both, testing::interval(-2, 2), 0),
                                      testing::interval(0, 0));
  EXPECT_FALSE(drop.consistent);
  EXPECT_EQ(drop.dim_inner, 1u);
  EXPECT_EQ(drop.dim_restricted, 0u);
}

TEST(AllSymmetric, Examples) {
  auto g = testing::reflections();
  auto samples = ball_window(1, 4, Norm::Linf);
  auto holds = all_solutions_symmetric_check(principal(1, "s1 - s1^-1"), g, samples, 4);
  EXPECT_TRUE(holds.holds);
  EXPECT_GT(holds.checked, 0u);

  auto ex3 = all_solutions_symmetric_check(principal(2, "s1 - s2"), testing::swap2(), ball_window(2, 3, Norm::L1), 4);
  EXPECT_TRUE(ex3.holds);

  auto fails = all_solutions_symmetric_check(principal(1, "s1 + s1^-1"), g, samples, 4);
  ASSERT_FALSE(fails.holds);
  ASSERT_EQ(fails.tuple.size(), 1u);
  EXPECT_EQ(std::abs(fails.tuple[0][0]), 1);
  EXPECT_TRUE(fails.exact);
}

TEST(AllSymmetric, HoldsImpliesEqualDimensions) {
  struct Case {
    ModulePresentation p;
    GroupTable g;
    Norm norm;
  };
  std::vector<Case> cases{{principal(1, "s1 - s1^-1"), testing::reflections(), Norm::Linf},
                          {principal(2, "s1 - s2"), testing::swap2(), Norm::L1}};
  for (const auto& c : cases) {
    ASSERT_TRUE(all_solutions_symmetric_check(c.p, c.g, ball_window(c.p.n, 2, c.norm), 4).holds);
    for (std::int64_t r = 1; r <= 3; ++r) {
      Window w = ball_window(c.p.n, r, c.norm);
      // Both spaces are taken with the group-closed construction so that the
      // truncations match.
      SubspaceBasis sub = submodule_window_space(c.p, w, 2, c.g);
      EXPECT_EQ(sub.echelon().nullspace().size(), symmetric_solution_basis(c.p, c.g, w, 2).size());
    }
  }
}

TEST(Recurrence, UnrolledSolutionsLieInTheSolutionSpace) {
  auto i = principal(1, "s1 + s1^-1");
  auto f = oracle::recurrence_unroll(i.generators[0][0], {q(1), q(0)}, -4, 4);
  EXPECT_EQ(render_sequence(f), "⋯ 1, 0, -1, 0, 1̂, 0, -1, 0, 1 ⋯");
  EXPECT_TRUE(in_span(solution_space_on_window(i, ball_window(1, 4, Norm::Linf), 1), f));

  auto j = principal(1, "s1 - s1^-1");
  auto fj = oracle::recurrence_unroll(j.generators[0][0], {q(0), q(1)}, -3, 3);
  EXPECT_EQ(render_sequence(fj), "⋯ 1, 0, 1, 0̂, 1, 0, 1 ⋯");
  EXPECT_TRUE(in_span(solution_space_on_window(j, ball_window(1, 3, Norm::Linf), 1), fj));

  for (int d : {2, 3, 5}) {
    auto p = principal(1, "1 - s1^" + std::to_string(d));
    std::vector<Cyclotomic> seed(d, q(0));
    seed[0] = q(1);
    auto fd = oracle::recurrence_unroll(p.generators[0][0], seed, -2 * d, 2 * d);
    Window w = ball_window(1, 2 * d, Norm::Linf);
    EXPECT_EQ(fd.values(), pattern(w, 1, [d](std::int64_t x) { return mod(x, d) == 0 ? 1 : 0; }).values());
    EXPECT_TRUE(in_span(solution_space_on_window(p, w, 1), fd));
  }
  EXPECT_THROW(oracle::recurrence_unroll(i.generators[0][0], {q(1)}, -2, 2), Error);
}

}  // namespace
}  // namespace symlat
