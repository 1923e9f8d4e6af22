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

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace potgame {

RationalVector DeltaVector::Expand() const {
  RationalVector v(dimension);
  v.at(index) = 1;
  return v;
}

LogicalMatrix::LogicalMatrix(std::size_t rows,
                             std::vector<std::size_t> column_indices)
    : rows_(rows), column_indices_(std::move(column_indices)) {
  for (std::size_t idx : column_indices_) {
    if (idx >= rows_) {
      throw std::invalid_argument("LogicalMatrix: column index " +
                                  std::to_string(idx) + " out of range");
    }
  }
}

RationalMatrix LogicalMatrix::ToDense() const {
  RationalMatrix m(rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) m(column_indices_[c], c) = 1;
  return m;
}

DeltaVector LogicalMatrix::Apply(const DeltaVector& x) const {
  if (x.dimension != cols()) {
    throw std::invalid_argument("LogicalMatrix::Apply: dimension mismatch");
  }
  return DeltaVector{rows_, column_indices_[x.index]};
}

StochasticMatrix::StochasticMatrix(RationalMatrix m) : m_(std::move(m)) {
  for (std::size_t c = 0; c < m_.cols(); ++c) {
    Rational sum = 0;
    for (std::size_t r = 0; r < m_.rows(); ++r) {
      if (sgn(m_(r, c)) < 0) {
        throw std::invalid_argument("StochasticMatrix: negative entry in column " +
                                    std::to_string(c));
      }
      sum += m_(r, c);
    }
    if (sum != 1) {
      throw std::invalid_argument("StochasticMatrix: column " + std::to_string(c) +
                                  " sums to " + sum.get_str());
    }
  }
}

StochasticMatrix StochasticMatrix::FromLogical(const LogicalMatrix& l) {
  return StochasticMatrix(l.ToDense());
}

bool StochasticMatrix::IsLogical() const {
  for (std::size_t c = 0; c < m_.cols(); ++c) {
    for (std::size_t r = 0; r < m_.rows(); ++r) {
      if (sgn(m_(r, c)) != 0 && m_(r, c) != 1) return false;
    }
  }
  return true;
}

RationalMatrix Kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
      }
    }
  }
  return out;
}

RationalMatrix Kron(std::span<const RationalMatrix> factors) {
  RationalMatrix out = RationalMatrix::Identity(1);
  for (const auto& f : factors) out = Kron(out, f);
  return out;
}

RationalMatrix Stp(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.cols(), p = b.rows();
  if (n == p) return a * b;
  if (n == 0 || p == 0) {
    throw std::invalid_argument("Stp: zero inner dimension");
  }
  const std::size_t t = std::lcm(n, p);
  return Kron(a, RationalMatrix::Identity(t / n)) *
         Kron(b, RationalMatrix::Identity(t / p));
}

LogicalMatrix SwapMatrix(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) {
    throw std::invalid_argument("SwapMatrix: dimensions must be positive");
  }
  std::vector<std::size_t> cols(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cols[i * n + j] = j * m + i;
  }
  return LogicalMatrix(m * n, std::move(cols));
}

DeltaVector DeltaProduct(std::span<const DeltaVector> factors) {
  if (factors.empty()) {
    throw std::invalid_argument("DeltaProduct: empty factor list");
  }
  DeltaVector out = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) {
    out.index = out.index * factors[f].dimension + factors[f].index;
    out.dimension *= factors[f].dimension;
  }
  return out;
}

std::size_t CardinalityProduct(std::span<const std::size_t> k, std::ptrdiff_t p,
                               std::ptrdiff_t q) {
  std::size_t out = 1;
  for (std::ptrdiff_t j = p; j <= q; ++j) out *= k[static_cast<std::size_t>(j)];
  return out;
}

RationalMatrix EMatrix(std::size_t player, std::span<const std::size_t> k) {
  if (player >= k.size()) {
    throw std::out_of_range("EMatrix: player index out of range");
  }
  const auto i = static_cast<std::ptrdiff_t>(player);
  const auto last = static_cast<std::ptrdiff_t>(k.size()) - 1;
  return Kron(Kron(RationalMatrix::Identity(CardinalityProduct(k, 0, i - 1)),
                   RationalMatrix::Ones(k[player], 1)),
              RationalMatrix::Identity(CardinalityProduct(k, i + 1, last)));
}

RationalMatrix DrawingMatrix(const std::set<std::size_t>& players,
                             std::span<const std::size_t> k) {
  for (std::size_t p : players) {
    if (p >= k.size()) {
      throw std::out_of_range("DrawingMatrix: player " + std::to_string(p) +
                              " out of range");
    }
  }
  RationalMatrix out = RationalMatrix::Identity(1);
  for (std::size_t i = 0; i < k.size(); ++i) {
    out = Kron(out, players.contains(i) ? RationalMatrix::Identity(k[i])
                                        : RationalMatrix::Ones(1, k[i]));
  }
  return out;
}

}  // namespace potgame
