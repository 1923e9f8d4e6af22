// Copyright 2026 The potgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "potgame/stp.h"

#include <gtest/gtest.h>

#include "oracles.h"

namespace potgame {
namespace {

TEST(Delta, ExpandAndProduct) {
  EXPECT_EQ((DeltaVector{3, 1}.Expand()), (RationalVector{0, 1, 0}));
  const DeltaVector f[] = {{2, 1}, {3, 2}};
  EXPECT_EQ(DeltaProduct(f), (DeltaVector{6, 5}));
  EXPECT_THROW(DeltaProduct(std::span<const DeltaVector>{}), std::invalid_argument);
}

TEST(Delta, ProductMatchesKronecker) {
  oracle::Generator gen(1);
  for (int t = 0; t < 50; ++t) {
    std::vector<DeltaVector> f;
    std::vector<RationalMatrix> cols;
    for (std::size_t i = 0, n = gen.Size(1, 4); i < n; ++i) {
      const std::size_t d = gen.Size(1, 4);
      f.push_back({d, gen.Size(0, d - 1)});
      cols.push_back(RationalMatrix::Column(f.back().Expand()));
    }
    EXPECT_EQ(RationalMatrix::Column(DeltaProduct(f).Expand()), Kron(cols));
  }
}

TEST(LogicalMatrix, ValidatesAndApplies) {
  const LogicalMatrix l(3, {2, 0});
  EXPECT_EQ(l.ToDense(), RationalMatrix({{0, 1}, {0, 0}, {1, 0}}));
  EXPECT_EQ(l.Apply({2, 0}), (DeltaVector{3, 2}));
  EXPECT_THROW(LogicalMatrix(2, {2}), std::invalid_argument);
}

TEST(StochasticMatrix, RejectsBadColumns) {
  EXPECT_NO_THROW(StochasticMatrix(RationalMatrix({{Rational(1, 2), 1}, {Rational(1, 2), 0}})));
  EXPECT_THROW(StochasticMatrix(RationalMatrix({{1, 1}, {1, 0}})), std::invalid_argument);
  EXPECT_THROW(StochasticMatrix(RationalMatrix({{2, 1}, {-1, 0}})), std::invalid_argument);
  EXPECT_TRUE(StochasticMatrix::FromLogical(LogicalMatrix(2, {1, 1})).IsLogical());
}

TEST(Kron, MatchesHandOracle) {
  oracle::Generator gen(2);
  for (int t = 0; t < 60; ++t) {
    const oracle::IntMatrix a = gen.Matrix(gen.Size(1, 3), gen.Size(1, 3));
    const oracle::IntMatrix b = gen.Matrix(gen.Size(1, 3), gen.Size(1, 3));
    EXPECT_EQ(Kron(oracle::ToRational(a), oracle::ToRational(b)),
              oracle::ToRational(oracle::Kronecker(a, b)));
  }
}

TEST(Stp, ReducesToOrdinaryProduct) {
  const RationalMatrix a({{1, 2}, {3, 4}});
  const RationalMatrix b({{0, 1}, {1, 1}});
  EXPECT_EQ(Stp(a, b), a * b);
}

TEST(Stp, HandExample) {
  // [1 2 3 4] ⋉ [1; 2] = [1·1+3·2, 2·1+4·2] = [7, 10].
  const RationalMatrix row({{1, 2, 3, 4}});
  const RationalMatrix col({{1}, {2}});
  EXPECT_EQ(Stp(row, col), RationalMatrix({{7, 10}}));
}

TEST(Swap, SmallCaseColumns) {
  // W_[2,3] maps δ_2^i ⋉ δ_3^j (index 3i + j) to δ_3^j ⋉ δ_2^i (index 2j + i).
  const LogicalMatrix w = SwapMatrix(2, 3);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(w.Apply({6, 3 * i + j}).index, 2 * j + i);
    }
  }
}

TEST(CardinalityProduct, Ranges) {
  const std::size_t k[] = {2, 3, 4};
  EXPECT_EQ(CardinalityProduct(k, 0, 2), 24u);
  EXPECT_EQ(CardinalityProduct(k, 1, 1), 3u);
  EXPECT_EQ(CardinalityProduct(k, 2, 1), 1u);
  EXPECT_EQ(CardinalityProduct(k, 0, -1), 1u);
}

TEST(EMatrix, ThreePlayerShapes) {
  const std::size_t k[] = {2, 2, 2};
  // E_1 = 1_2 ⊗ I_4, E_2 = I_2 ⊗ 1_2 ⊗ I_2, E_3 = I_4 ⊗ 1_2.
  const RationalMatrix one = RationalMatrix::Ones(2, 1);
  const RationalMatrix i2 = RationalMatrix::Identity(2), i4 = RationalMatrix::Identity(4);
  EXPECT_EQ(EMatrix(0, k), Kron(one, i4));
  const RationalMatrix mid[] = {i2, one, i2};
  EXPECT_EQ(EMatrix(1, k), Kron(mid));
  EXPECT_EQ(EMatrix(2, k), Kron(i4, one));
  EXPECT_THROW(EMatrix(3, k), std::out_of_range);
}

TEST(EMatrix, TransposeDropsOwnStrategy) {
  // E_i^T V is a function of a_{-i} only: its lift is constant along a_i.
  const std::size_t k[] = {2, 3};
  const RationalMatrix e = EMatrix(1, k);
  EXPECT_EQ(e.rows(), 6u);
  EXPECT_EQ(e.cols(), 2u);
  for (std::size_t r = 0; r < 6; ++r) EXPECT_EQ(e(r, r / 3), 1);
}

TEST(DrawingMatrix, FourPlayerBlocks) {
  const std::size_t k[] = {2, 2, 2, 2};
  const RationalMatrix i8 = RationalMatrix::Identity(8);
  const RationalMatrix ones_row = RationalMatrix::Ones(1, 2);
  // U = {1, 2, 3}: I_8 ⊗ 1_2^T.
  EXPECT_EQ(DrawingMatrix({0, 1, 2}, k), Kron(i8, ones_row));
  // U = {2, 3, 4}: 1_2^T ⊗ I_8.
  EXPECT_EQ(DrawingMatrix({1, 2, 3}, k), Kron(ones_row, i8));
  EXPECT_EQ(DrawingMatrix({0, 1, 2, 3}, k), RationalMatrix::Identity(16));
  EXPECT_THROW(DrawingMatrix({4}, k), std::out_of_range);
}

}  // namespace
}  // namespace potgame
