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

// Finite games in structure-vector form, network topologies and
// system objectives.
//
// Players, strategies and states are 0-based. A profile a = (a_0, ..., a_{n-1})
// sits at position Σ a_i · Π_{j>i} k_j of every structure vector.

#ifndef POTGAME_GAME_H_
#define POTGAME_GAME_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "potgame/ratmat.h"
#include "potgame/stp.h"

namespace potgame {

using StrategyProfile = std::vector<std::size_t>;
using Neighborhood = std::set<std::size_t>;

class ProfileSpace {
 public:
  ProfileSpace() = default;
  explicit ProfileSpace(std::vector<std::size_t> cardinalities);

  std::size_t players() const { return k_.size(); }
  std::size_t size() const { return size_; }
  std::size_t cardinality(std::size_t player) const { return k_.at(player); }
  const std::vector<std::size_t>& cardinalities() const { return k_; }

  // Throws std::out_of_range for a malformed profile.
  std::size_t Index(std::span<const std::size_t> profile) const;
  StrategyProfile Profile(std::size_t index) const;
  DeltaVector Delta(std::span<const std::size_t> profile) const;

  std::size_t StrategyAt(std::size_t index, std::size_t player) const {
    return (index / strides_[player]) % k_[player];
  }
  // Index of the profile obtained by letting `player` switch to `strategy`.
  std::size_t WithStrategy(std::size_t index, std::size_t player,
                           std::size_t strategy) const {
    return index - StrategyAt(index, player) * strides_[player] +
           strategy * strides_[player];
  }

  friend bool operator==(const ProfileSpace&, const ProfileSpace&) = default;

 private:
  std::vector<std::size_t> k_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

// G = {N, S, c} with c_i given by its structure vector V^c_i.
class FiniteGame {
 public:
  FiniteGame(std::vector<std::size_t> cardinalities,
             std::vector<RationalVector> utilities);

  std::size_t players() const { return space_.players(); }
  std::size_t profile_count() const { return space_.size(); }
  const ProfileSpace& space() const { return space_; }
  const std::vector<std::size_t>& cardinalities() const {
    return space_.cardinalities();
  }
  const RationalVector& utility(std::size_t player) const {
    return utilities_.at(player);
  }
  const std::vector<RationalVector>& utilities() const { return utilities_; }

  const Rational& Payoff(std::size_t player, std::size_t profile_index) const {
    return utilities_[player][profile_index];
  }

  friend bool operator==(const FiniteGame&, const FiniteGame&) = default;

 private:
  ProfileSpace space_;
  std::vector<RationalVector> utilities_;
};

// Undirected graph on n nodes. Edges keep the orientation they were given
// with: for edge (u, v) node u takes the row role of a pairwise game.
class NetworkTopology {
 public:
  explicit NetworkTopology(std::size_t nodes,
                           std::vector<std::pair<std::size_t, std::size_t>> edges = {});
  static NetworkTopology Complete(std::size_t nodes);

  std::size_t nodes() const { return nodes_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  // U(i): i together with all its neighbours.
  const Neighborhood& neighborhood(std::size_t node) const {
    return neighborhoods_.at(node);
  }
  const std::vector<Neighborhood>& neighborhoods() const {
    return neighborhoods_;
  }
  bool Adjacent(std::size_t u, std::size_t v) const;

  friend bool operator==(const NetworkTopology&, const NetworkTopology&) = default;

 private:
  std::size_t nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<Neighborhood> neighborhoods_;
};

// Structure vector of φ : S → Q (fixed topology) or φ : X × S → Q, the
// latter stored as r consecutive blocks of length k.
class ObjectiveFunction {
 public:
  static ObjectiveFunction Fixed(RationalVector values,
                                 std::vector<std::size_t> cardinalities);
  static ObjectiveFunction StateBased(RationalVector values,
                                      std::vector<std::size_t> cardinalities,
                                      std::size_t states);

  bool state_based() const { return states_.has_value(); }
  std::size_t state_count() const { return states_.value_or(1); }
  std::size_t profile_count() const { return space_.size(); }
  const ProfileSpace& space() const { return space_; }
  const RationalVector& values() const { return values_; }
  RationalVector Block(std::size_t state) const;
  const Rational& At(std::size_t state, std::size_t profile_index) const {
    return values_[state * space_.size() + profile_index];
  }

  friend bool operator==(const ObjectiveFunction&, const ObjectiveFunction&) = default;

 private:
  ObjectiveFunction(RationalVector values, ProfileSpace space,
                    std::optional<std::size_t> states);

  RationalVector values_;
  ProfileSpace space_;
  std::optional<std::size_t> states_;
};

// Two-player fundamental network game. row[s * col_strategies + t] is the
// row player's payoff when row plays s and column plays t; col likewise.
struct Fng {
  std::size_t row_strategies = 2;
  std::size_t col_strategies = 2;
  RationalVector row;
  RationalVector col;

  void Validate() const;
  bool Symmetric() const;
  FiniteGame AsGame() const;
  friend bool operator==(const Fng&, const Fng&) = default;
};

Rational PayoffEval(const FiniteGame& game, std::size_t player,
                    std::span<const std::size_t> profile);

// Σ_{j ∈ U(i)\{i}} c_ij(a_i, a_j). On an edge (u, v), u is paid from the
// row table and v from the column table; for a symmetric FNG this is the
// same as i always taking the row role.
Rational AggregateUtility(const NetworkTopology& topology, const Fng& fng,
                          std::size_t player, std::span<const std::size_t> profile);

FiniteGame NetworkGame(const NetworkTopology& topology, const Fng& fng);

// φ(x, a) = 2 Σ_i 1{a_i = 0} + Σ_{ordered (i,j) ∈ E(x)} 1{a_i = a_j} / 2,
// one block per topology. Requires every k_i = 2.
ObjectiveFunction ConsensusObjective(std::span<const NetworkTopology> per_state,
                                     std::span<const std::size_t> cardinalities);

std::vector<StrategyProfile> PureNashEquilibria(const FiniteGame& game);
bool IsPureNash(const FiniteGame& game, std::size_t profile_index);

// state must be given iff the objective is state based.
Rational ObjectiveEval(const ObjectiveFunction& objective,
                       std::optional<std::size_t> state,
                       std::span<const std::size_t> profile);

// Number of sub-profiles over the players in U.
std::size_t LocalProfileCount(const Neighborhood& players,
                              std::span<const std::size_t> cardinalities);
// Position of the sub-profile a_U inside a structure vector over U.
std::size_t LocalIndex(const ProfileSpace& space, std::size_t profile_index,
                       const Neighborhood& players);
// V · Γ_U, computed by index mapping.
RationalVector LiftLocalUtility(std::span<const Rational> local,
                                const Neighborhood& players,
                                std::span<const std::size_t> cardinalities);
// True iff the function only depends on the strategies of players in U.
bool DependsOnlyOn(std::span<const Rational> values, const Neighborhood& players,
                   const ProfileSpace& space);

}  // namespace potgame

#endif  // POTGAME_GAME_H_
