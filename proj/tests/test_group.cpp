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
#include <random>

#include "support.hpp"

namespace symlat {
namespace {

using testing::poly;
using testing::q;
using testing::vec;

TEST(AutElement, Validation) {
  EXPECT_THROW(AutElement::monomial_map({{2}}, 1), Error);
  EXPECT_THROW(AutElement({q(0)}, {{1}}), Error);
  EXPECT_THROW(AutElement({q(1)}, {{1, 0}, {0, 1}}), Error);
  EXPECT_NO_THROW(AutElement::monomial_map({{1, 1}, {0, 1}}, 1));
  try {
    AutElement::monomial_map({{2}}, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnimodular);
  }
}

TEST(AutElement, ApplyToMonomial) {
  auto refl = AutElement::monomial_map({{-1}}, 1);
  auto img = apply_to_monomial(refl, Exponent{3});
  EXPECT_TRUE(img.coeff.is_one());
  EXPECT_EQ(img.image, Exponent{-3});

  for (int d : {2, 3, 5}) {
    auto zeta = AutElement::homothety({Cyclotomic::root_of_unity(d, 1)});
    for (std::int64_t x = -7; x <= 7; ++x) {
      auto m = apply_to_monomial(zeta, Exponent{x});
      EXPECT_EQ(m.coeff, Cyclotomic::root_of_unity(d, x));
      EXPECT_EQ(m.image, Exponent{x});
    }
  }
  auto id = AutElement::identity(2, 1);
  EXPECT_EQ(apply_to_monomial(id, Exponent{4, -2}).image, (Exponent{4, -2}));
  EXPECT_TRUE(coefficient_character(refl, Exponent{5}).is_one());
  EXPECT_TRUE(coefficient_character(AutElement::homothety({q(-1, 2)}), Exponent{0}).is_one());
  // Image is M^T x: sigma_1 -> sigma_1 sigma_2 sends s1^a s2^b to s1^a s2^(a+b).
  auto shear = AutElement::monomial_map({{1, 1}, {0, 1}}, 1);
  EXPECT_EQ(apply_to_monomial(shear, Exponent{2, 3}).image, (Exponent{2, 5}));
}

TEST(AutElement, Composition) {
  auto refl = AutElement::monomial_map({{-1}}, 1);
  EXPECT_TRUE(compose(refl, refl).is_identity());
  for (int r : {-3, 2, 5}) {
    AutElement g({q(r)}, {{-1}});
    EXPECT_TRUE(compose(g, g).is_identity()) << r;
  }
  for (int d : {2, 3, 5, 7}) {
    auto zeta = AutElement::homothety({Cyclotomic::root_of_unity(d, 1)});
    AutElement acc = zeta;
    for (int i = 1; i < d; ++i) acc = compose(zeta, acc);
    EXPECT_TRUE(acc.is_identity()) << d;
  }
  EXPECT_THROW(compose(refl, AutElement::identity(2, 1)), Error);
}

TEST(AutElement, Inverse) {
  auto id = AutElement::identity(2, 3);
  EXPECT_EQ(inverse(id), id);
  auto refl = AutElement::monomial_map({{-1}}, 1);
  EXPECT_EQ(inverse(refl), refl);
  auto tau = AutElement::monomial_map({{0, 1}, {1, 0}}, 1);
  EXPECT_EQ(inverse(tau), tau);
  AutElement g({Cyclotomic::root_of_unity(3, 1), q(2, 3)}, {{1, 1}, {0, 1}});
  EXPECT_TRUE(compose(g, inverse(g)).is_identity());
  EXPECT_TRUE(compose(inverse(g), g).is_identity());
}

AutElement random_element(std::mt19937_64& rng, int conductor) {
  static const std::vector<IntMatrix> mats{
      {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {{-1, 0}, {0, 1}}, {{1, 1}, {0, 1}}, {{0, -1}, {1, 0}}, {{2, 1}, {1, 1}}};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(mats.size()) - 1), j(0, conductor - 1), s(-2, 2);
  auto scalar = [&] {
    int v = s(rng);
    return Cyclotomic::root_of_unity(conductor, j(rng)) * q(v == 0 ? 3 : v, conductor);
  };
  return AutElement({scalar(), scalar()}, mats[pick(rng)]);
}

TEST(AutElement, HomomorphismProperty) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    AutElement g = random_element(rng, 6), h = random_element(rng, 6);
    Exponent x{e(rng), e(rng)};
    auto hx = apply_to_monomial(h, x);
    auto ghx = apply_to_monomial(g, hx.image);
    auto direct = apply_to_monomial(compose(g, h), x);
    EXPECT_EQ(direct.image, ghx.image);
    EXPECT_EQ(direct.coeff, hx.coeff * ghx.coeff);
    // Multiplicativity in x.
    Exponent y{e(rng), e(rng)};
    auto gx = apply_to_monomial(g, x), gy = apply_to_monomial(g, y), gxy = apply_to_monomial(g, x + y);
    EXPECT_EQ(gxy.coeff, gx.coeff * gy.coeff);
    EXPECT_EQ(gxy.image, gx.image + gy.image);
  }
}

TEST(AutElement, SemidirectIdentity) {
  // psi1(R) o psi2(M) = psi2(M) o psi1(phi(M)(R)) on every sigma_i.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    AutElement g = random_element(rng, 4);
    auto r = AutElement::homothety(g.homothety_part());
    auto m = AutElement::monomial_map(g.monomial_part(), 4);
    auto twisted = AutElement::homothety(twist_homothety(g.monomial_part(), g.homothety_part()));
    EXPECT_EQ(compose(r, m), compose(m, twisted));
  }
}

TEST(GroupTable, Generation) {
  auto g2 = testing::reflections();
  EXPECT_EQ(g2.order(), 2u);
  EXPECT_TRUE(g2[g2.identity_index()].is_identity());
  for (int d : {2, 3, 5}) EXPECT_EQ(testing::roots_of_unity(d).order(), static_cast<std::size_t>(d));
  EXPECT_EQ(testing::swap2().order(), 2u);
  // Dihedral group of the square and the hexagonal rotation.
  auto d4 = generate_group(2, 1,
                           {AutElement::monomial_map({{0, -1}, {1, 0}}, 1),
                            AutElement::monomial_map({{0, 1}, {1, 0}}, 1)});
  EXPECT_EQ(d4.order(), 8u);
  EXPECT_EQ(generate_group(2, 1, {AutElement::monomial_map({{1, -1}, {1, 0}}, 1)}).order(), 6u);
  try {
    generate_group(2, 1, {AutElement::monomial_map({{1, 1}, {0, 1}}, 1)}, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderExceeded);
  }
  EXPECT_THROW(generate_group(1, 1, {AutElement({q(2)}, {{1}})}, 100), Error);
}

TEST(GroupTable, TableProperties) {
  std::vector<GroupTable> groups{
      testing::reflections(), testing::roots_of_unity(5), testing::swap2(),
      generate_group(2, 4,
                     {AutElement::monomial_map({{0, -1}, {1, 0}}, 4),
                      AutElement::homothety({Cyclotomic::root_of_unity(4, 1), Cyclotomic::root_of_unity(4, 1)})}),
      generate_group(1, 1, {AutElement({q(2)}, {{-1}})})};
  for (const auto& group : groups) {
    for (const auto& g : group.elements()) {
      auto det = determinant(g.monomial_part());
      EXPECT_TRUE(det == 1 || det == -1);
      auto ord = element_order(g, group.order());
      ASSERT_TRUE(ord);
      EXPECT_EQ(group.order() % *ord, 0u);
      ASSERT_TRUE(group.index_of(inverse(g)));
      // Left multiplication permutes the table.
      std::vector<std::size_t> image;
      for (const auto& h : group.elements()) {
        auto idx = group.index_of(compose(g, h));
        ASSERT_TRUE(idx);
        image.push_back(*idx);
      }
      std::sort(image.begin(), image.end());
      EXPECT_EQ(std::adjacent_find(image.begin(), image.end()), image.end());
    }
  }
}

TEST(GroupAction, ApplyToVector) {
  auto refl = AutElement::monomial_map({{-1}}, 1);
  EXPECT_EQ(apply_to_vector(refl, vec(1, {"s1 + s1^-1"})), vec(1, {"s1^-1 + s1"}));
  EXPECT_EQ(apply_to_vector(refl, vec(1, {"s1 - s1^-1"})), vec(1, {"s1^-1 - s1"}));
  ModuleVector v = vec(2, {"s1 - 2 s2^3", "z^1 s1 s2"}, 3);
  EXPECT_EQ(apply_to_vector(AutElement::identity(2, 3), v), v);
  auto tau = AutElement::monomial_map({{0, 1}, {1, 0}}, 1);
  EXPECT_EQ(apply_to_poly(tau, poly(2, "s1 - s2")), poly(2, "s2 - s1"));
}

TEST(Matrices, Helpers) {
  EXPECT_EQ(determinant({{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(determinant({{0, 1}, {1, 0}}), -1);
  IntMatrix m{{2, 1}, {7, 4}};
  EXPECT_EQ(multiply(m, unimodular_inverse(m)), identity_matrix(2));
  EXPECT_EQ(transpose(IntMatrix{{1, 2}, {3, 4}}), (IntMatrix{{1, 3}, {2, 4}}));
  EXPECT_THROW(unimodular_inverse({{2}}), Error);
}

}  // namespace
}  // namespace symlat
