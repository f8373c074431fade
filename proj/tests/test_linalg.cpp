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

#include <random>

#include "oracle/oracle.hpp"
#include "symlat/linalg.hpp"

namespace symlat {
namespace {

Cyclotomic c(std::int64_t v) { return Cyclotomic::from_rational(1, Rational(v)); }

TEST(Sparse, Operations) {
  SparseVector a{{0, c(1)}, {3, c(2)}}, b{{3, c(-2)}, {5, c(1)}};
  EXPECT_EQ(sparse_add(a, b), (SparseVector{{0, c(1)}, {5, c(1)}}));
  EXPECT_EQ(sparse_axpy(a, c(2), b), (SparseVector{{0, c(1)}, {3, c(-2)}, {5, c(2)}}));
  EXPECT_TRUE(sparse_scale(a, c(0)).empty());
  EXPECT_EQ(sparse_dot(a, b, 1), c(-4));
  EXPECT_EQ(sparse_at(a, 3, 1), c(2));
  EXPECT_TRUE(sparse_at(a, 2, 1).is_zero());
  EXPECT_EQ(sparse_from_pairs({{4, c(1)}, {1, c(2)}, {4, c(-1)}}), (SparseVector{{1, c(2)}}));
}

TEST(EchelonForm, RankAndMembership) {
  EchelonForm e(4, 1);
  EXPECT_TRUE(e.insert({{0, c(2)}, {1, c(4)}}));
  EXPECT_TRUE(e.insert({{1, c(1)}, {3, c(1)}}));
  EXPECT_FALSE(e.insert({{0, c(1)}, {1, c(3)}, {3, c(1)}}));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.contains({{0, c(1)}, {3, c(-2)}}));
  EXPECT_FALSE(e.contains({{2, c(1)}}));
  // Reduced: pivots 1 and no other row has an entry at a pivot column.
  for (const auto& [p, row] : e.rows()) {
    EXPECT_TRUE(sparse_at(row, p, 1).is_one());
    for (const auto& [p2, row2] : e.rows())
      if (p2 != p) EXPECT_TRUE(sparse_at(row2, p, 1).is_zero());
  }
}

TEST(EchelonForm, NullspaceMatchesOracleOnRandomMatrices) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> v(-2, 2), dim(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    EchelonForm e(cols, 3);
    std::vector<oracle::Row> dense;
    for (std::size_t r = 0; r < rows; ++r) {
      oracle::Row row;
      std::vector<std::pair<std::size_t, Cyclotomic>> entries;
      for (std::size_t j = 0; j < cols; ++j) {
        Cyclotomic x = Cyclotomic::from_rational(3, Rational(v(rng))) +
                       Cyclotomic::from_rational(3, Rational(v(rng) / 2)) * Cyclotomic::root_of_unity(3, 1);
        row.push_back(x);
        entries.emplace_back(j, x);
      }
      dense.push_back(row);
      e.insert(sparse_from_pairs(std::move(entries)));
    }
    auto reference = oracle::canonical_span(dense, cols, 3);
    EXPECT_EQ(e.rank(), reference.dimension);
    EXPECT_EQ(oracle::canonical_span(e.row_list(), cols, 3).canonical, reference.canonical);
    auto null = e.nullspace();
    EXPECT_EQ(null.size() + e.rank(), cols);
    for (const auto& n : null)
      for (const auto& row : e.row_list()) EXPECT_TRUE(sparse_dot(n, row, 3).is_zero());
    // The null basis is already canonical.
    EXPECT_EQ(oracle::canonical_span(null, cols, 3).canonical, [&] {
      std::string s;
      for (const auto& n : null) {
        for (std::size_t j = 0; j < cols; ++j) s += (j ? "," : "") + sparse_at(n, j, 3).to_string();
        s += "\n";
      }
      return s;
    }());
  }
}

TEST(EchelonForm, Coordinates) {
  EchelonForm e(3, 1);
  e.insert({{0, c(1)}, {2, c(1)}});
  e.insert({{1, c(1)}});
  SparseVector v{{0, c(3)}, {1, c(-1)}, {2, c(3)}};
  EXPECT_EQ(e.coordinates(v), (std::vector<Cyclotomic>{c(3), c(-1)}));
}

}  // namespace
}  // namespace symlat
