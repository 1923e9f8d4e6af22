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

#include "potgame/ratmat.h"

#include <gtest/gtest.h>

#include "oracles.h"

namespace potgame {
namespace {

RationalMatrix M(std::initializer_list<std::initializer_list<Rational>> rows) {
  return RationalMatrix(rows);
}

TEST(ParseRational, AcceptsIntegersAndFractions) {
  EXPECT_EQ(ParseRational("3"), Rational(3));
  EXPECT_EQ(ParseRational("-7"), Rational(-7));
  EXPECT_EQ(ParseRational("6/4"), Rational(3, 2));
  EXPECT_EQ(ParseRational("-1/10"), Rational(-1, 10));
}

TEST(ParseRational, RejectsGarbage) {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1/2/3", " 1"}) {
    EXPECT_THROW(ParseRational(bad), std::invalid_argument) << bad;
  }
}

TEST(ToString, CanonicalForm) {
  EXPECT_EQ(ToString(ParseRational("6/4")), "3/2");
  EXPECT_EQ(ToString(ParseRational("-4/2")), "-2");
  const RationalVector v = {Rational(1), Rational(-1, 3), Rational(0)};
  EXPECT_EQ(ToString(v), "[1,-1/3,0]");
}

TEST(RationalMatrix, ArithmeticMatchesHandComputation) {
  const RationalMatrix a = M({{1, 2}, {3, 4}});
  const RationalMatrix b = M({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, M({{2, 1}, {4, 3}}));
  EXPECT_EQ(a + b, M({{1, 3}, {4, 4}}));
  EXPECT_EQ(a - b, M({{1, 1}, {2, 4}}));
  EXPECT_EQ(Rational(1, 2) * a, M({{Rational(1, 2), 1}, {Rational(3, 2), 2}}));
  EXPECT_EQ(a.Transpose(), M({{1, 3}, {2, 4}}));
  const RationalVector x = {1, -1};
  EXPECT_EQ(a * x, (RationalVector{-1, -1}));
  EXPECT_EQ(LeftMultiply(x, a), (RationalVector{-2, -2}));
}

TEST(RationalMatrix, DimensionMismatchThrows) {
  EXPECT_THROW(M({{1, 2}}) * M({{1, 2}}), std::invalid_argument);
  EXPECT_THROW(M({{1, 2}}) + M({{1}}), std::invalid_argument);
}

TEST(RationalMatrix, Stacking) {
  const RationalMatrix a = M({{1, 2}});
  const RationalMatrix b = M({{3, 4}});
  EXPECT_EQ(VStack(a, b), M({{1, 2}, {3, 4}}));
  EXPECT_EQ(HStack(a, b), M({{1, 2, 3, 4}}));
  const RationalMatrix blocks[] = {M({{1}}), M({{2, 3}})};
  EXPECT_EQ(BlockDiagonal(blocks), M({{1, 0, 0}, {0, 2, 3}}));
  EXPECT_EQ(VStack(RationalMatrix(0, 5), a), a);
}

TEST(Rref, KnownExample) {
  const EchelonForm e = ReducedRowEchelon(M({{2, 4, 2}, {1, 2, 3}, {0, 0, 1}}));
  EXPECT_EQ(e.reduced, M({{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
  EXPECT_EQ(e.pivot_cols, (std::vector<std::size_t>{0, 2}));
}

TEST(Solve, ConsistentSystemWithFreeVariable) {
  const RationalMatrix a = M({{1, 1, 0}, {0, 1, 1}});
  const RationalVector b = {2, 3};
  const auto x = SolveLinear(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, b);
  EXPECT_EQ((*x)[2], 0);  // free variable pinned to zero
}

TEST(Solve, InconsistentSystem) {
  const RationalVector b = {1, 3};
  EXPECT_FALSE(SolveLinear(M({{1, 1}, {2, 2}}), b).has_value());
  const RationalVector short_b = {1};
  EXPECT_THROW(SolveLinear(M({{1, 1}, {2, 2}}), short_b), std::invalid_argument);
}

TEST(Inverse, ExactFractions) {
  const auto inv = Inverse(M({{2, 1}, {1, 1}}));
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv, M({{1, -1}, {-1, 2}}));
  EXPECT_FALSE(Inverse(M({{1, 2}, {2, 4}})).has_value());
  const auto third = Inverse(M({{3}}));
  ASSERT_TRUE(third.has_value());
  EXPECT_EQ((*third)(0, 0), Rational(1, 3));
}

TEST(RowSpace, IntersectionOfPlanes) {
  // span{e1, e2} ∩ span{e2, e3} = span{e2}.
  const RationalMatrix p = M({{1, 0, 0}, {0, 1, 0}});
  const RationalMatrix q = M({{0, 1, 0}, {0, 0, 1}});
  const RationalMatrix i = RowSpaceIntersection(p, q);
  EXPECT_EQ(i, M({{0, 1, 0}}));
  const RationalMatrix disjoint = RowSpaceIntersection(M({{1, 0}}), M({{0, 1}}));
  EXPECT_EQ(disjoint.rows(), 0u);
  EXPECT_THROW(RowSpaceIntersection(M({{1, 0}}), M({{1}})), std::invalid_argument);
}

TEST(RowSpace, Membership) {
  const RationalMatrix m = M({{1, 1, 0}, {0, 1, 1}});
  const RationalVector in = {1, 2, 1};
  const RationalVector out = {1, 0, 0};
  const RationalVector zero = {0, 0, 0};
  EXPECT_TRUE(InRowSpace(in, m));
  EXPECT_FALSE(InRowSpace(out, m));
  EXPECT_TRUE(InRowSpace(zero, m));
  const RationalVector wrong = {1};
  EXPECT_THROW(InRowSpace(wrong, m), std::invalid_argument);
}

TEST(RankProperty, AgreesWithModularOracle) {
  oracle::Generator gen(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = gen.Size(1, 6), c = gen.Size(1, 6);
    oracle::IntMatrix m = gen.Matrix(r, c, -3, 3);
    // Force dependencies now and then so low ranks show up.
    if (r > 1 && gen.Coin()) {
      for (std::size_t j = 0; j < c; ++j) m[r - 1][j] = 2 * m[0][j] - m[r / 2][j];
    }
    EXPECT_EQ(Rank(oracle::ToRational(m)), oracle::IntegerRank(m));
  }
}

TEST(InverseProperty, ProductIsIdentity) {
  oracle::Generator gen(12);
  int inverted = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = gen.Size(1, 5);
    const RationalMatrix m = oracle::ToRational(gen.Matrix(n, n));
    const auto inv = Inverse(m);
    EXPECT_EQ(inv.has_value(), Rank(m) == n);
    if (inv) {
      ++inverted;
      EXPECT_EQ(m * *inv, RationalMatrix::Identity(n));
    }
  }
  EXPECT_GT(inverted, 60);
}

TEST(IntersectionProperty, ContainedInBothAndDimensionFormula) {
  oracle::Generator gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t c = gen.Size(2, 6);
    const RationalMatrix a = oracle::ToRational(gen.Matrix(gen.Size(1, c), c, -2, 2));
    const RationalMatrix b = oracle::ToRational(gen.Matrix(gen.Size(1, c), c, -2, 2));
    const RationalMatrix i = RowSpaceIntersection(a, b);
    for (std::size_t r = 0; r < i.rows(); ++r) {
      EXPECT_TRUE(InRowSpace(i.row(r), a));
      EXPECT_TRUE(InRowSpace(i.row(r), b));
    }
    // dim(A ∩ B) = dim A + dim B - dim(A + B).
    EXPECT_EQ(Rank(i) + Rank(VStack(a, b)), Rank(a) + Rank(b));
  }
}

}  // namespace
}  // namespace potgame
