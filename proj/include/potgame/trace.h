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

#ifndef POTGAME_TRACE_H_
#define POTGAME_TRACE_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "potgame/game.h"
#include "potgame/ratmat.h"

namespace potgame {

struct TraceStep {
  std::size_t t = 0;
  std::optional<std::size_t> state;
  StrategyProfile profile;
  std::optional<Rational> objective;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct SimulationTrace {
  std::uint64_t seed = 0;
  std::vector<TraceStep> steps;
  // Fixed topology: first t at which the profile is a fixed point of the
  // update rule. State based: first t at which (x, a) lies in the invariant
  // set of a recurrent state equilibrium.
  std::optional<std::size_t> converged_at;
  // First t at which a non-fixed profile repeats (simultaneous MBRA only).
  std::optional<std::size_t> revisited_at;
};

// CSV with header t,state,a_1,...,a_n,phi. Strategies and states are written
// 1-based; the state and phi columns are empty when absent.
void WriteTraceCsv(std::ostream& os, const SimulationTrace& trace,
                   std::size_t players);
// Inverse of WriteTraceCsv (seed and convergence fields are not stored).
// Throws std::invalid_argument on malformed input.
std::vector<TraceStep> ReadTraceCsv(std::istream& is);

}  // namespace potgame

#endif  // POTGAME_TRACE_H_
