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

#include "potgame/markov.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace potgame {

namespace {

// Tarjan's strongly connected components over edges from -> to.
std::vector<std::vector<std::size_t>> StronglyConnected(
    const std::vector<std::vector<std::size_t>>& out) {
  const std::size_t n = out.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : out[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  return components;
}

}  // namespace

AbsorptionAnalysis AnalyzeAbsorption(const StochasticMatrix& transition) {
  const std::size_t n = transition.rows();
  if (transition.cols() != n) {
    throw std::invalid_argument("AnalyzeAbsorption: transition matrix is not square");
  }
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t from = 0; from < n; ++from) {
    for (std::size_t to = 0; to < n; ++to) {
      if (sgn(transition(to, from)) > 0) out[from].push_back(to);
    }
  }

  AbsorptionAnalysis result;
  result.class_of.assign(n, -1);
  auto components = StronglyConnected(out);
  std::sort(components.begin(), components.end());
  for (auto& comp : components) {
    std::vector<bool> member(n, false);
    for (std::size_t v : comp) member[v] = true;
    const bool closed = std::all_of(comp.begin(), comp.end(), [&](std::size_t v) {
      return std::all_of(out[v].begin(), out[v].end(),
                         [&](std::size_t w) { return member[w]; });
    });
    if (!closed) continue;
    for (std::size_t v : comp) {
      result.class_of[v] = static_cast<int>(result.closed_classes.size());
    }
    result.closed_classes.push_back(std::move(comp));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (result.class_of[v] < 0) result.transient.push_back(v);
  }

  const std::size_t classes = result.closed_classes.size();
  const std::size_t t = result.transient.size();
  result.absorption.assign(n, RationalVector(classes));
  result.hitting_time.assign(n, Rational(0));
  for (std::size_t v = 0; v < n; ++v) {
    if (result.class_of[v] >= 0) {
      result.absorption[v][static_cast<std::size_t>(result.class_of[v])] = 1;
    }
  }
  if (t == 0) return result;

  // Row-oriented blocks: (I - Q)[a][b] = δ_ab - P(transient_a -> transient_b),
  // R[a][c] = P(transient_a -> class c).
  RationalMatrix i_minus_q = RationalMatrix::Identity(t);
  RationalMatrix r(t, classes);
  std::vector<int> transient_pos(n, -1);
  for (std::size_t a = 0; a < t; ++a) transient_pos[result.transient[a]] = static_cast<int>(a);
  for (std::size_t a = 0; a < t; ++a) {
    const std::size_t from = result.transient[a];
    for (std::size_t to : out[from]) {
      if (transient_pos[to] >= 0) {
        i_minus_q(a, static_cast<std::size_t>(transient_pos[to])) -= transition(to, from);
      } else {
        r(a, static_cast<std::size_t>(result.class_of[to])) += transition(to, from);
      }
    }
  }
  const auto fundamental = Inverse(i_minus_q);
  if (!fundamental) throw std::logic_error("AnalyzeAbsorption: I - Q is singular");
  const RationalMatrix b = *fundamental * r;
  const RationalVector times =
      *fundamental * std::span<const Rational>(RationalVector(t, Rational(1)));
  for (std::size_t a = 0; a < t; ++a) {
    result.absorption[result.transient[a]] = b.row(a);
    result.hitting_time[result.transient[a]] = times[a];
  }
  return result;
}

RationalVector StationaryDistribution(const StochasticMatrix& transition) {
  const std::size_t n = transition.rows();
  RationalMatrix system(n + 1, n);
  RationalVector rhs(n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      system(r, c) = transition(r, c) - (r == c ? 1 : 0);
    }
  }
  for (std::size_t c = 0; c < n; ++c) system(n, c) = 1;
  rhs[n] = 1;
  auto pi = SolveLinear(system, rhs);
  if (!pi) throw std::logic_error("StationaryDistribution: no invariant law");
  if (std::any_of(pi->begin(), pi->end(), [](const Rational& q) { return sgn(q) < 0; })) {
    throw std::logic_error("StationaryDistribution: non-unique invariant law");
  }
  return *pi;
}

RationalVector Propagate(const StochasticMatrix& transition, RationalVector initial,
                         std::size_t steps) {
  for (std::size_t s = 0; s < steps; ++s) {
    initial = transition.matrix() * std::span<const Rational>(initial);
  }
  return initial;
}

}  // namespace potgame
