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

// Exact analysis of finite Markov chains given by column-stochastic
// matrices: T(to, from) is the probability of moving from `from` to `to`.

#ifndef POTGAME_MARKOV_H_
#define POTGAME_MARKOV_H_

#include <cstddef>
#include <vector>

#include "potgame/ratmat.h"
#include "potgame/stp.h"

namespace potgame {

struct AbsorptionAnalysis {
  // Closed communicating classes, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> closed_classes;
  std::vector<std::size_t> transient;
  // absorption[s][c]: probability that a chain started in s is eventually
  // trapped in closed_classes[c].
  std::vector<RationalVector> absorption;
  // Expected number of steps before entering a closed class (0 inside one).
  RationalVector hitting_time;
  // Class index of each state, or -1 for transient ones.
  std::vector<int> class_of;
};

// Fundamental-matrix analysis N = (I - Q)^{-1} over the transient states.
AbsorptionAnalysis AnalyzeAbsorption(const StochasticMatrix& transition);

// The probability vector π with T π = π. Assumes a single closed class;
// throws std::logic_error when the canonical solution is not a law.
RationalVector StationaryDistribution(const StochasticMatrix& transition);

// T^steps · initial.
RationalVector Propagate(const StochasticMatrix& transition, RationalVector initial,
                         std::size_t steps);

}  // namespace potgame

#endif  // POTGAME_MARKOV_H_
