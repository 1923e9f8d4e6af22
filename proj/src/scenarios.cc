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

#include "potgame/scenarios.h"

#include <stdexcept>

namespace potgame {

namespace {

RationalVector Parse(std::initializer_list<std::string_view> items) {
  RationalVector out;
  for (std::string_view s : items) out.push_back(ParseRational(s));
  return out;
}

RationalVector Ints(std::initializer_list<long> items) {
  RationalVector out;
  for (long v : items) out.emplace_back(v);
  return out;
}

Fng PrisonersDilemma() {
  // 1 = cooperate, 2 = defect; entries in row-major (a_row, a_col) order.
  return Fng{2, 2, Ints({3, 0, 5, 1}), Ints({3, 5, 0, 1})};
}

SystemDefinition TwoByTwo(RationalVector u1, RationalVector u2) {
  SystemDefinition def;
  def.players = 2;
  def.cardinalities = {2, 2};
  def.utilities = std::vector<std::vector<RationalVector>>{{std::move(u1), std::move(u2)}};
  return def;
}

}  // namespace

SystemDefinition PrisonersDilemmaDefinition() {
  const Fng pd = PrisonersDilemma();
  return TwoByTwo(pd.row, pd.col);
}

SystemDefinition MatchingPenniesDefinition() {
  return TwoByTwo(Ints({1, -1, -1, 1}), Ints({-1, 1, 1, -1}));
}

SystemDefinition ThreePlayerDefinition() {
  SystemDefinition def;
  def.players = 3;
  def.cardinalities = {2, 2, 2};
  def.edges = std::vector<Edge>{{0, 1}, {1, 2}};
  def.objective = ObjectiveSpec{ObjectiveSpec::Kind::kExplicit, reference::ThreePlayerObjective(),
                                std::nullopt};
  // Players 1 and 3 are given on their neighbourhoods, player 2 sees everyone.
  def.utilities = std::vector<std::vector<RationalVector>>{
      {Ints({2, 1, 1, 0}), Ints({3, 4, 2, 3, 2, 0, 1, -1}), Ints({1, 0, 1, 0})}};
  def.sur = {Cadence::kRoundRobin, InformationMode::kLocal};
  def.seed = 1;
  def.initial = InitialCondition{std::nullopt, {1, 1, 1}};
  return def;
}

SystemDefinition CycleNetworkDefinition() {
  SystemDefinition def;
  def.players = 4;
  def.cardinalities = {2, 2, 2, 2};
  def.edges = std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  def.fng = PrisonersDilemma();
  def.objective = ObjectiveSpec{ObjectiveSpec::Kind::kEdgePotentialSum, {}, std::nullopt};
  def.sur = {Cadence::kRoundRobin, InformationMode::kLocal};
  def.seed = 1;
  def.initial = InitialCondition{std::nullopt, {0, 0, 0, 0}};
  return def;
}

SystemDefinition SwitchedConsensusDefinition() {
  SystemDefinition def;
  def.players = 4;
  def.cardinalities = {2, 2, 2, 2};
  def.mode = Mode::kStateBased;
  const std::vector<Edge> base = {{0, 3}, {1, 2}, {2, 3}};
  std::vector<Edge> to_three = base, to_two = base;
  to_three.emplace_back(0, 2);
  to_two.emplace_back(0, 1);
  def.states = {{"x1", base}, {"x2", to_three}, {"x3", to_two}};
  def.objective = ObjectiveSpec{ObjectiveSpec::Kind::kConsensus, {}, std::nullopt};
  std::vector<NetworkTopology> topologies;
  for (const StateSpec& s : def.states) topologies.emplace_back(4, s.edges);
  def.utilities = ConsensusUtilities(topologies, def.cardinalities);
  def.sep = Sep::kSep2;
  def.epsilon = Rational(1, 10);
  def.seed = 20260101;
  def.initial = reference::ConsensusInitialConditions().front();
  return def;
}

SystemDefinition LineGraphDefinition() {
  SystemDefinition def;
  def.players = 3;
  def.cardinalities = {2, 2, 2};
  def.edges = std::vector<Edge>{{0, 1}, {1, 2}};
  def.objective = ObjectiveSpec{ObjectiveSpec::Kind::kExplicit,
                                Ints({1, 0, 1, 0, 0, 1, 0, 1}), std::nullopt};
  return def;
}

std::vector<std::string> ScenarioNames() {
  return {"prisoners_dilemma", "matching_pennies", "three_player",
          "cycle_network",     "switched_consensus", "line_graph"};
}

SystemDefinition ScenarioByName(std::string_view name) {
  if (name == "prisoners_dilemma") return PrisonersDilemmaDefinition();
  if (name == "matching_pennies") return MatchingPenniesDefinition();
  if (name == "three_player") return ThreePlayerDefinition();
  if (name == "cycle_network") return CycleNetworkDefinition();
  if (name == "switched_consensus") return SwitchedConsensusDefinition();
  if (name == "line_graph") return LineGraphDefinition();
  throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

namespace reference {

RationalVector ThreePlayerXi() { return Ints({0, 1, 0, 1, 1, 3, 1, 0, -1, 0, 0, 1}); }

RationalVector ThreePlayerObjective() { return Ints({3, 2, 2, 1, 2, 1, 1, 0}); }

RationalVector ThreePlayerPotential() { return Ints({2, 1, 1, 0, 1, 0, 0, -1}); }

RationalVector PrisonersDilemmaPotential() { return Ints({-2, 0, 0, 1}); }

RationalVector CycleNetworkObjective() {
  return Ints({-8, -4, -4, -1, -4, 0, -1, 2, -4, -1, 0, 2, -1, 2, 2, 4});
}

std::vector<RationalVector> ConsensusObjectiveBlocks() {
  return {Ints({11, 7, 7, 5, 8, 4, 6, 4, 8, 6, 4, 4, 5, 3, 3, 3}),
          Ints({12, 8, 7, 5, 9, 5, 6, 4, 8, 6, 5, 5, 5, 3, 4, 4}),
          Ints({12, 8, 8, 6, 8, 4, 6, 4, 8, 6, 4, 4, 6, 4, 4, 4})};
}

std::vector<RationalMatrix> ConsensusTransitionBlocks() {
  auto block = [](std::initializer_list<std::string_view> r1,
                  std::initializer_list<std::string_view> r2,
                  std::initializer_list<std::string_view> r3) {
    return RationalMatrix(VStack(VStack(RationalMatrix::Row(Parse(r1)),
                                        RationalMatrix::Row(Parse(r2))),
                                 RationalMatrix::Row(Parse(r3))));
  };
  const std::string_view t = "1/3";
  return {
      block({t, t, t, t, t, t, t, t, t, t, t, t, t, t, t, t},
            {t, t, t, t, t, t, t, t, t, t, t, t, t, t, t, t},
            {t, t, t, t, t, t, t, t, t, t, t, t, t, t, t, t}),
      block({"0", "0", t, t, "0", "0", t, t, t, t, "0", "0", t, t, "0", "0"},
            {"1/2", "1/2", t, t, "1", "1", t, t, t, t, "1", "1", t, t, "1/2", "1/2"},
            {"1/2", "1/2", t, t, "0", "0", t, t, t, t, "0", "0", t, t, "1/2", "1/2"}),
      block({"0", "0", "0", "0", t, t, t, t, t, t, t, t, "0", "0", "0", "0"},
            {"1/2", "1/2", "0", "0", t, t, t, t, t, t, t, t, "0", "0", "1/2", "1/2"},
            {"1/2", "1/2", "1", "1", t, t, t, t, t, t, t, t, "1", "1", "1/2", "1/2"}),
  };
}

std::vector<MatrixEntry> ConsensusActionExcerpt() {
  // Rows 1-4 and 13-16 of columns 1-4, 47 and 48.
  const std::vector<std::size_t> rows = {1, 2, 3, 4, 13, 14, 15, 16};
  const std::vector<std::size_t> cols = {1, 2, 3, 4, 47, 48};
  const std::vector<std::vector<std::string_view>> values = {
      {"1", "9/10", "9/10", "81/100", "0", "0"},
      {"0", "1/10", "0", "9/100", "0", "0"},
      {"0", "0", "1/10", "9/100", "0", "0"},
      {"0", "0", "0", "1/100", "0", "0"},
      {"0", "0", "0", "0", "9/100", "0"},
      {"0", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "1/100", "0"},
      {"0", "0", "0", "0", "0", "1"},
  };
  std::vector<MatrixEntry> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out.push_back({rows[r], cols[c], ParseRational(values[r][c])});
    }
  }
  return out;
}

std::vector<InitialCondition> ConsensusInitialConditions() {
  return {{2, {0, 0, 0, 1}}, {1, {0, 1, 1, 1}}, {0, {1, 0, 1, 0}}};
}

}  // namespace reference

}  // namespace potgame
