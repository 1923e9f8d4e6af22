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

#ifndef POTGAME_RATMAT_H_
#define POTGAME_RATMAT_H_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace potgame {

// Arbitrary-precision rational. GMP keeps every value canonical
// (denominator > 0, reduced, zero is 0/1).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
// input or a zero denominator.
Rational ParseRational(std::string_view text);
std::string ToString(const Rational& value);
std::string ToString(std::span<const Rational> values);

// Dense row-major matrix over Rational. Empty shapes (0 rows or 0 cols) are
// valid and stand for the zero subspace when used as a row-space basis.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, RationalVector entries);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix Identity(std::size_t n);
  static RationalMatrix Ones(std::size_t rows, std::size_t cols);
  static RationalMatrix Column(std::span<const Rational> values);
  static RationalMatrix Row(std::span<const Rational> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const RationalVector& entries() const { return entries_; }
  RationalVector row(std::size_t r) const;
  RationalVector col(std::size_t c) const;

  RationalMatrix Transpose() const;
  bool IsZero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RationalVector entries_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& m);
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x);
std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

// Row vector times matrix: returns v * M.
RationalVector LeftMultiply(std::span<const Rational> v, const RationalMatrix& m);

RationalMatrix VStack(const RationalMatrix& top, const RationalMatrix& bottom);
RationalMatrix HStack(const RationalMatrix& left, const RationalMatrix& right);
RationalMatrix BlockDiagonal(std::span<const RationalMatrix> blocks);

// Reduced row-echelon form with the column index of every pivot.
struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};
EchelonForm ReducedRowEchelon(RationalMatrix m);

std::size_t Rank(const RationalMatrix& m);

// One particular solution of A x = b with every free variable set to zero,
// or nullopt when the system is inconsistent. Throws std::invalid_argument
// if A.rows() != b.size().
std::optional<RationalVector> SolveLinear(const RationalMatrix& a,
                                          std::span<const Rational> b);

// Inverse of a square matrix, nullopt if singular.
std::optional<RationalMatrix> Inverse(const RationalMatrix& m);

// Nonzero rows of the RREF; the leading entry of every row is 1.
RationalMatrix RowSpaceBasis(const RationalMatrix& m);

// Basis (in RREF) of rowspace(m1) ∩ rowspace(m2), by Zassenhaus' algorithm.
RationalMatrix RowSpaceIntersection(const RationalMatrix& m1,
                                    const RationalMatrix& m2);

bool InRowSpace(std::span<const Rational> v, const RationalMatrix& m);

}  // namespace potgame

#endif  // POTGAME_RATMAT_H_
