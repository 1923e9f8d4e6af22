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

// Built-in scenarios: the worked examples used by `potgame repro` and the
// shipped data/ files, plus their published reference values.

#ifndef POTGAME_SCENARIOS_H_
#define POTGAME_SCENARIOS_H_

#include <string>
#include <string_view>
#include <vector>

#include "potgame/definition.h"

namespace potgame {

SystemDefinition PrisonersDilemmaDefinition();
SystemDefinition MatchingPenniesDefinition();
// Three players, two strategies each, with a potential objective.
SystemDefinition ThreePlayerDefinition();
// Prisoner's Dilemma on the 4-cycle 1-2-3-4-1 with the sum of edge
// potentials as objective.
SystemDefinition CycleNetworkDefinition();
// Switched four-agent consensus: three states, SEP-2, ε = 1/10.
SystemDefinition SwitchedConsensusDefinition();
// Path 1-2-3 with φ = 1{a_1 = a_3}; undesignable at player 1.
SystemDefinition LineGraphDefinition();

// Name → definition, for `potgame scenario`.
std::vector<std::string> ScenarioNames();
SystemDefinition ScenarioByName(std::string_view name);

namespace reference {

// The published certificate ξ = [ξ_1; ξ_2; ξ_3] of the three-player game.
RationalVector ThreePlayerXi();
RationalVector ThreePlayerObjective();
RationalVector ThreePlayerPotential();
RationalVector PrisonersDilemmaPotential();
RationalVector CycleNetworkObjective();
// φ(x_s, ·) for s = 1, 2, 3.
std::vector<RationalVector> ConsensusObjectiveBlocks();
// The 3 × 16 state transition block of x_s, row y holding P(x_y | x_s, ·).
std::vector<RationalMatrix> ConsensusTransitionBlocks();

struct MatrixEntry {
  std::size_t row;  // 1-based
  std::size_t col;  // 1-based
  Rational value;
};
// Every entry shown in the published excerpt of M_F at ε = 1/10.
std::vector<MatrixEntry> ConsensusActionExcerpt();
// Initial (profile, state) pairs of the published simulation runs, 0-based.
std::vector<InitialCondition> ConsensusInitialConditions();

}  // namespace reference

}  // namespace potgame

#endif  // POTGAME_SCENARIOS_H_
