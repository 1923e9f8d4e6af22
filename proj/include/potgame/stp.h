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

// Semi-tensor product algebra and the structured matrices built from it.
//
// Indices are 0-based throughout: the 1-based δ_m^i is DeltaVector{m, i-1},
// and δ_m[i_1 ... i_r] is a LogicalMatrix whose column_indices hold i_j - 1.
// Strategy profiles are ordered with player 0 most significant, so the STP
// of the players' δ-vectors has index Σ a_i · Π_{j>i} k_j.

#ifndef POTGAME_STP_H_
#define POTGAME_STP_H_

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "potgame/ratmat.h"

namespace potgame {

struct DeltaVector {
  std::size_t dimension = 1;
  std::size_t index = 0;

  RationalVector Expand() const;
  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;
};

// δ_m[i_1 ... i_r]: an m×r 0/1 matrix with exactly one 1 per column.
class LogicalMatrix {
 public:
  LogicalMatrix(std::size_t rows, std::vector<std::size_t> column_indices);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return column_indices_.size(); }
  const std::vector<std::size_t>& column_indices() const {
    return column_indices_;
  }

  RationalMatrix ToDense() const;
  DeltaVector Apply(const DeltaVector& x) const;

  friend bool operator==(const LogicalMatrix&, const LogicalMatrix&) = default;

 private:
  std::size_t rows_;
  std::vector<std::size_t> column_indices_;
};

// Column-stochastic matrix (every column a probability vector). The
// constructor validates non-negativity and exact unit column sums.
class StochasticMatrix {
 public:
  explicit StochasticMatrix(RationalMatrix m);
  static StochasticMatrix FromLogical(const LogicalMatrix& l);

  const RationalMatrix& matrix() const { return m_; }
  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return m_(r, c);
  }
  // True when every column is a point mass.
  bool IsLogical() const;

  friend bool operator==(const StochasticMatrix&, const StochasticMatrix&) = default;

 private:
  RationalMatrix m_;
};

RationalMatrix Kron(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix Kron(std::span<const RationalMatrix> factors);

// Left semi-tensor product (A ⊗ I_{t/n})(B ⊗ I_{t/p}), t = lcm(n, p).
RationalMatrix Stp(const RationalMatrix& a, const RationalMatrix& b);

// W_[m,n]: column i*n + j holds δ_{mn}^{j*m + i}.
LogicalMatrix SwapMatrix(std::size_t m, std::size_t n);

// STP of δ-vectors, computed on indices. Throws on an empty list.
DeltaVector DeltaProduct(std::span<const DeltaVector> factors);

// k^{[p,q]} over 0-based inclusive ranges; 1 when q < p.
std::size_t CardinalityProduct(std::span<const std::size_t> k, std::ptrdiff_t p,
                               std::ptrdiff_t q);

// E_i = I_{k^{[0,i-1]}} ⊗ 1_{k_i} ⊗ I_{k^{[i+1,n-1]}}, shape k × (k/k_i).
RationalMatrix EMatrix(std::size_t player, std::span<const std::size_t> k);

// Γ_U = ⊗_i γ_i with γ_i = I_{k_i} for i ∈ U and 1_{k_i}^T otherwise.
RationalMatrix DrawingMatrix(const std::set<std::size_t>& players,
                             std::span<const std::size_t> k);

}  // namespace potgame

#endif  // POTGAME_STP_H_
