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

// System definition files: a JSON document describing a fixed-topology or a
// state based game, its objective, utilities and dynamics parameters.
// Everything is 1-based on disk and 0-based in memory.

#ifndef POTGAME_DEFINITION_H_
#define POTGAME_DEFINITION_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "potgame/dynamics.h"
#include "potgame/game.h"
#include "potgame/state_based.h"

namespace potgame {

// Malformed or inconsistent definition (exit code 2).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A command needs a field the definition does not provide (exit code 3).
class MissingPrerequisite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { kFixed, kStateBased };

using Edge = std::pair<std::size_t, std::size_t>;

struct StateSpec {
  std::string label;
  std::vector<Edge> edges;
  friend bool operator==(const StateSpec&, const StateSpec&) = default;
};

struct ObjectiveSpec {
  enum class Kind { kExplicit, kConsensus, kEdgePotentialSum };
  Kind kind = Kind::kExplicit;
  // Explicit objectives: the fixed vector, or all state blocks concatenated.
  RationalVector values;
  // Edge potential sums: the bimatrix; falls back to the top-level fng.
  std::optional<Fng> fng;
  friend bool operator==(const ObjectiveSpec&, const ObjectiveSpec&) = default;
};

struct SurSpec {
  Cadence cadence = Cadence::kRoundRobin;
  InformationMode information = InformationMode::kGlobal;
  friend bool operator==(const SurSpec&, const SurSpec&) = default;
};

struct InitialCondition {
  std::optional<std::size_t> state;
  StrategyProfile profile;
  friend bool operator==(const InitialCondition&, const InitialCondition&) = default;
};

struct SystemDefinition {
  std::size_t players = 0;
  std::vector<std::size_t> cardinalities;
  Mode mode = Mode::kFixed;
  // Fixed mode only; absent means the complete graph.
  std::optional<std::vector<Edge>> edges;
  // State based mode only; each entry carries the full edge list of x.
  std::vector<StateSpec> states;
  std::optional<ObjectiveSpec> objective;
  // utilities[x][i]: full (length k) or local (length Π_{j ∈ U^x(i)} k_j)
  // structure vector. Fixed mode has exactly one block.
  std::optional<std::vector<std::vector<RationalVector>>> utilities;
  std::optional<Fng> fng;
  Sep sep = Sep::kSep2;
  std::optional<Rational> epsilon;
  SurSpec sur;
  std::optional<std::uint64_t> seed;
  std::optional<InitialCondition> initial;

  std::size_t state_count() const { return mode == Mode::kFixed ? 1 : states.size(); }
  friend bool operator==(const SystemDefinition&, const SystemDefinition&) = default;
};

// Throws SchemaError carrying the line/column or the offending field path.
SystemDefinition ParseDefinition(std::string_view text);
SystemDefinition LoadDefinition(const std::string& path);
// Checks every cross-field constraint; ParseDefinition calls it.
void ValidateDefinition(const SystemDefinition& definition);
nlohmann::json DefinitionToJson(const SystemDefinition& definition);
std::string SerializeDefinition(const SystemDefinition& definition);

// Rationals travel as bare integers or "p/q" strings.
nlohmann::json RationalToJson(const Rational& value);

std::vector<NetworkTopology> ResolveTopologies(const SystemDefinition& definition);
// nullopt when the definition has no objective.
std::optional<ObjectiveFunction> ResolveObjective(const SystemDefinition& definition);
// Full structure vectors [x][i], from `utilities` or, failing that, from the
// network game of `fng` on each topology. nullopt when neither is present.
std::optional<std::vector<std::vector<RationalVector>>> ResolveUtilities(
    const SystemDefinition& definition);
// Fixed mode game; throws MissingPrerequisite without utilities.
FiniteGame ResolveGame(const SystemDefinition& definition);
// State based game with M_P built from the objective by the chosen SEP;
// throws MissingPrerequisite without objective, utilities or epsilon.
StateBasedGame ResolveStateGame(const SystemDefinition& definition);

std::string ModeName(Mode mode);
std::string SepName(Sep sep);
std::string CadenceName(Cadence cadence);
std::string InformationName(InformationMode information);
Sep ParseSep(std::string_view name);
Cadence ParseCadence(std::string_view name);
InformationMode ParseInformation(std::string_view name);

}  // namespace potgame

#endif  // POTGAME_DEFINITION_H_
