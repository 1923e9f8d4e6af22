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

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace potgame {

namespace {

bool IsIntegerLiteral(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + start, s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void CheckSameShape(const RationalMatrix& a, const RationalMatrix& b,
                    const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
  }
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string ToString(const Rational& value) { return value.get_str(); }

std::string ToString(std::span<const Rational> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].get_str();
  }
  out += ']';
  return out;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols,
                               RationalVector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("RationalMatrix: entry count != rows*cols");
  }
}

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw std::invalid_argument("RationalMatrix: ragged initializer");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::Identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::Ones(std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, cols, RationalVector(rows * cols, Rational(1)));
}

RationalMatrix RationalMatrix::Column(std::span<const Rational> values) {
  return RationalMatrix(values.size(), 1,
                        RationalVector(values.begin(), values.end()));
}

RationalMatrix RationalMatrix::Row(std::span<const Rational> values) {
  return RationalMatrix(1, values.size(),
                        RationalVector(values.begin(), values.end()));
}

RationalVector RationalMatrix::row(std::size_t r) const {
  auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return RationalVector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

RationalVector RationalMatrix::col(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::Transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool RationalMatrix::IsZero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  CheckSameShape(a, b, "operator+");
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  CheckSameShape(a, b, "operator-");
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("operator*: inner dimensions differ");
  }
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& lhs = a(r, k);
      if (sgn(lhs) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (sgn(b(k, c)) != 0) out(r, c) += lhs * b(k, c);
      }
    }
  }
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) *= s;
  }
  return out;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) {
    throw std::invalid_argument("matrix-vector product: length mismatch");
  }
  RationalVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (sgn(a(r, c)) != 0 && sgn(x[c]) != 0) out[r] += a(r, c) * x[c];
    }
  }
  return out;
}

RationalVector LeftMultiply(std::span<const Rational> v, const RationalMatrix& m) {
  if (m.rows() != v.size()) {
    throw std::invalid_argument("vector-matrix product: length mismatch");
  }
  RationalVector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (sgn(v[r]) == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) != 0) out[c] += v[r] * m(r, c);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << (c ? " " : "") << m(r, c);
    }
    os << (r + 1 == m.rows() ? "]" : "\n");
  }
  if (m.rows() == 0) os << "[]";
  return os;
}

RationalMatrix VStack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) {
    throw std::invalid_argument("VStack: column counts differ");
  }
  RationalVector e = top.entries();
  e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
  return RationalMatrix(top.rows() + bottom.rows(), top.cols(), std::move(e));
}

RationalMatrix HStack(const RationalMatrix& left, const RationalMatrix& right) {
  if (left.rows() != right.rows()) {
    throw std::invalid_argument("HStack: row counts differ");
  }
  RationalMatrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) {
      out(r, left.cols() + c) = right(r, c);
    }
  }
  return out;
}

RationalMatrix BlockDiagonal(std::span<const RationalMatrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  RationalMatrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

EchelonForm ReducedRowEchelon(RationalMatrix m) {
  EchelonForm out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(lead, j));
    }
    const Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(lead, j)) != 0) m(r, j) -= factor * m(lead, j);
      }
    }
    out.pivot_cols.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t Rank(const RationalMatrix& m) {
  return ReducedRowEchelon(m).pivot_cols.size();
}

std::optional<RationalVector> SolveLinear(const RationalMatrix& a,
                                          std::span<const Rational> b) {
  if (a.rows() != b.size()) {
    throw std::invalid_argument("SolveLinear: A.rows() != length(b)");
  }
  const EchelonForm ef =
      ReducedRowEchelon(HStack(a, RationalMatrix::Column(b)));
  const std::size_t n = a.cols();
  if (!ef.pivot_cols.empty() && ef.pivot_cols.back() == n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t r = 0; r < ef.pivot_cols.size(); ++r) {
    x[ef.pivot_cols[r]] = ef.reduced(r, n);
  }
  return x;
}

std::optional<RationalMatrix> Inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("Inverse: matrix is not square");
  }
  const std::size_t n = m.rows();
  const EchelonForm ef = ReducedRowEchelon(HStack(m, RationalMatrix::Identity(n)));
  if (ef.pivot_cols.size() < n || (n > 0 && ef.pivot_cols[n - 1] != n - 1)) {
    return std::nullopt;
  }
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  }
  return inv;
}

RationalMatrix RowSpaceBasis(const RationalMatrix& m) {
  const EchelonForm ef = ReducedRowEchelon(m);
  const std::size_t rank = ef.pivot_cols.size();
  RationalVector e(ef.reduced.entries().begin(),
                   ef.reduced.entries().begin() +
                       static_cast<std::ptrdiff_t>(rank * m.cols()));
  return RationalMatrix(rank, m.cols(), std::move(e));
}

RationalMatrix RowSpaceIntersection(const RationalMatrix& m1,
                                    const RationalMatrix& m2) {
  if (m1.cols() != m2.cols()) {
    throw std::invalid_argument("RowSpaceIntersection: column counts differ");
  }
  const std::size_t c = m1.cols();
  if (m1.rows() == 0 || m2.rows() == 0) return RationalMatrix(0, c);
  // [m1 m1; m2 0]: rows whose left half reduces to zero carry the
  // intersection in their right half.
  RationalMatrix z(m1.rows() + m2.rows(), 2 * c);
  for (std::size_t r = 0; r < m1.rows(); ++r) {
    for (std::size_t j = 0; j < c; ++j) {
      z(r, j) = m1(r, j);
      z(r, c + j) = m1(r, j);
    }
  }
  for (std::size_t r = 0; r < m2.rows(); ++r) {
    for (std::size_t j = 0; j < c; ++j) z(m1.rows() + r, j) = m2(r, j);
  }
  const EchelonForm ef = ReducedRowEchelon(std::move(z));
  RationalVector e;
  std::size_t count = 0;
  for (std::size_t r = 0; r < ef.pivot_cols.size(); ++r) {
    if (ef.pivot_cols[r] < c) continue;
    for (std::size_t j = 0; j < c; ++j) e.push_back(ef.reduced(r, c + j));
    ++count;
  }
  return RowSpaceBasis(RationalMatrix(count, c, std::move(e)));
}

bool InRowSpace(std::span<const Rational> v, const RationalMatrix& m) {
  if (v.size() != m.cols()) {
    throw std::invalid_argument("InRowSpace: vector length != column count");
  }
  if (std::all_of(v.begin(), v.end(),
                  [](const Rational& q) { return sgn(q) == 0; })) {
    return true;
  }
  if (m.rows() == 0) return false;
  return Rank(VStack(m, RationalMatrix::Row(v))) == Rank(m);
}

}  // namespace potgame
