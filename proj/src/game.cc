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

#include "potgame/game.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace potgame {

ProfileSpace::ProfileSpace(std::vector<std::size_t> cardinalities)
    : k_(std::move(cardinalities)), strides_(k_.size()) {
  for (std::size_t i = k_.size(); i-- > 0;) {
    if (k_[i] == 0) throw std::invalid_argument("ProfileSpace: empty strategy set");
    strides_[i] = size_;
    size_ *= k_[i];
  }
}

std::size_t ProfileSpace::Index(std::span<const std::size_t> profile) const {
  if (profile.size() != k_.size()) {
    throw std::out_of_range("profile has " + std::to_string(profile.size()) +
                            " entries, expected " + std::to_string(k_.size()));
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < k_.size(); ++i) {
    if (profile[i] >= k_[i]) {
      throw std::out_of_range("strategy " + std::to_string(profile[i]) +
                              " out of range for player " + std::to_string(i));
    }
    index += profile[i] * strides_[i];
  }
  return index;
}

StrategyProfile ProfileSpace::Profile(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("profile index out of range");
  StrategyProfile a(k_.size());
  for (std::size_t i = 0; i < k_.size(); ++i) a[i] = StrategyAt(index, i);
  return a;
}

DeltaVector ProfileSpace::Delta(std::span<const std::size_t> profile) const {
  return DeltaVector{size_, Index(profile)};
}

FiniteGame::FiniteGame(std::vector<std::size_t> cardinalities,
                       std::vector<RationalVector> utilities)
    : space_(std::move(cardinalities)), utilities_(std::move(utilities)) {
  if (space_.players() == 0) throw std::invalid_argument("FiniteGame: no players");
  for (std::size_t k : space_.cardinalities()) {
    if (k < 2) throw std::invalid_argument("FiniteGame: every k_i must be >= 2");
  }
  if (utilities_.size() != space_.players()) {
    throw std::invalid_argument("FiniteGame: need one utility per player");
  }
  for (std::size_t i = 0; i < utilities_.size(); ++i) {
    if (utilities_[i].size() != space_.size()) {
      throw std::invalid_argument("FiniteGame: utility of player " +
                                  std::to_string(i) + " has length " +
                                  std::to_string(utilities_[i].size()) +
                                  ", expected " + std::to_string(space_.size()));
    }
  }
}

NetworkTopology::NetworkTopology(
    std::size_t nodes, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : nodes_(nodes), neighborhoods_(nodes) {
  for (std::size_t i = 0; i < nodes; ++i) neighborhoods_[i].insert(i);
  for (auto [u, v] : edges) {
    if (u >= nodes || v >= nodes) {
      throw std::out_of_range("edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") references a missing node");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop on node " + std::to_string(u));
    }
    if (Adjacent(u, v)) continue;
    edges_.emplace_back(u, v);
    neighborhoods_[u].insert(v);
    neighborhoods_[v].insert(u);
  }
}

NetworkTopology NetworkTopology::Complete(std::size_t nodes) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < nodes; ++u) {
    for (std::size_t v = u + 1; v < nodes; ++v) edges.emplace_back(u, v);
  }
  return NetworkTopology(nodes, std::move(edges));
}

bool NetworkTopology::Adjacent(std::size_t u, std::size_t v) const {
  return u != v && neighborhoods_.at(u).contains(v);
}

ObjectiveFunction::ObjectiveFunction(RationalVector values, ProfileSpace space,
                                     std::optional<std::size_t> states)
    : values_(std::move(values)), space_(std::move(space)), states_(states) {
  const std::size_t r = states_.value_or(1);
  if (r == 0 || values_.size() != r * space_.size()) {
    throw std::invalid_argument("ObjectiveFunction: length " +
                                std::to_string(values_.size()) + ", expected " +
                                std::to_string(r * space_.size()));
  }
}

ObjectiveFunction ObjectiveFunction::Fixed(RationalVector values,
                                           std::vector<std::size_t> cardinalities) {
  return ObjectiveFunction(std::move(values), ProfileSpace(std::move(cardinalities)),
                           std::nullopt);
}

ObjectiveFunction ObjectiveFunction::StateBased(RationalVector values,
                                                std::vector<std::size_t> cardinalities,
                                                std::size_t states) {
  return ObjectiveFunction(std::move(values), ProfileSpace(std::move(cardinalities)),
                           states);
}

RationalVector ObjectiveFunction::Block(std::size_t state) const {
  if (state >= state_count()) throw std::out_of_range("objective block out of range");
  auto first = values_.begin() + static_cast<std::ptrdiff_t>(state * space_.size());
  return RationalVector(first, first + static_cast<std::ptrdiff_t>(space_.size()));
}

void Fng::Validate() const {
  if (row_strategies == 0 || col_strategies == 0 ||
      row.size() != row_strategies * col_strategies ||
      col.size() != row_strategies * col_strategies) {
    throw std::invalid_argument("Fng: payoff tables do not match cardinalities");
  }
}

bool Fng::Symmetric() const {
  if (row_strategies != col_strategies) return false;
  const std::size_t m = row_strategies;
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      if (row[s * m + t] != col[t * m + s]) return false;
    }
  }
  return true;
}

FiniteGame Fng::AsGame() const {
  Validate();
  return FiniteGame({row_strategies, col_strategies}, {row, col});
}

Rational PayoffEval(const FiniteGame& game, std::size_t player,
                    std::span<const std::size_t> profile) {
  if (player >= game.players()) throw std::out_of_range("player out of range");
  return game.Payoff(player, game.space().Index(profile));
}

Rational AggregateUtility(const NetworkTopology& topology, const Fng& fng,
                          std::size_t player, std::span<const std::size_t> profile) {
  if (player >= topology.nodes() || profile.size() != topology.nodes()) {
    throw std::out_of_range("AggregateUtility: player or profile out of range");
  }
  Rational total = 0;
  for (auto [u, v] : topology.edges()) {
    if (u != player && v != player) continue;
    const std::size_t cell = profile[u] * fng.col_strategies + profile[v];
    total += (player == u) ? fng.row.at(cell) : fng.col.at(cell);
  }
  return total;
}

FiniteGame NetworkGame(const NetworkTopology& topology, const Fng& fng) {
  fng.Validate();
  if (fng.row_strategies != fng.col_strategies) {
    throw std::invalid_argument("NetworkGame: FNG must be square");
  }
  const std::size_t n = topology.nodes();
  ProfileSpace space(std::vector<std::size_t>(n, fng.row_strategies));
  std::vector<RationalVector> utilities(n, RationalVector(space.size()));
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    const StrategyProfile a = space.Profile(idx);
    for (std::size_t i = 0; i < n; ++i) {
      utilities[i][idx] = AggregateUtility(topology, fng, i, a);
    }
  }
  return FiniteGame(space.cardinalities(), std::move(utilities));
}

ObjectiveFunction ConsensusObjective(std::span<const NetworkTopology> per_state,
                                     std::span<const std::size_t> cardinalities) {
  if (std::any_of(cardinalities.begin(), cardinalities.end(),
                  [](std::size_t k) { return k != 2; })) {
    throw std::invalid_argument("ConsensusObjective: all agents must be binary");
  }
  if (per_state.empty()) throw std::invalid_argument("ConsensusObjective: no states");
  ProfileSpace space(std::vector<std::size_t>(cardinalities.begin(), cardinalities.end()));
  RationalVector values;
  values.reserve(per_state.size() * space.size());
  for (const NetworkTopology& topology : per_state) {
    if (topology.nodes() != space.players()) {
      throw std::invalid_argument("ConsensusObjective: topology size mismatch");
    }
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
      const StrategyProfile a = space.Profile(idx);
      Rational phi = 2 * static_cast<long>(std::count(a.begin(), a.end(), 0));
      // Each undirected edge appears twice among ordered pairs, at 1/2 each.
      for (auto [u, v] : topology.edges()) {
        if (a[u] == a[v]) phi += 1;
      }
      values.push_back(phi);
    }
  }
  return ObjectiveFunction::StateBased(std::move(values), space.cardinalities(),
                                       per_state.size());
}

bool IsPureNash(const FiniteGame& game, std::size_t profile_index) {
  const ProfileSpace& space = game.space();
  for (std::size_t i = 0; i < game.players(); ++i) {
    const Rational& current = game.Payoff(i, profile_index);
    for (std::size_t s = 0; s < space.cardinality(i); ++s) {
      if (game.Payoff(i, space.WithStrategy(profile_index, i, s)) > current) {
        return false;
      }
    }
  }
  return true;
}

std::vector<StrategyProfile> PureNashEquilibria(const FiniteGame& game) {
  std::vector<StrategyProfile> out;
  for (std::size_t idx = 0; idx < game.profile_count(); ++idx) {
    if (IsPureNash(game, idx)) out.push_back(game.space().Profile(idx));
  }
  return out;
}

Rational ObjectiveEval(const ObjectiveFunction& objective,
                       std::optional<std::size_t> state,
                       std::span<const std::size_t> profile) {
  if (state.has_value() != objective.state_based()) {
    throw std::invalid_argument(objective.state_based()
                                    ? "ObjectiveEval: state index required"
                                    : "ObjectiveEval: unexpected state index");
  }
  const std::size_t x = state.value_or(0);
  if (x >= objective.state_count()) {
    throw std::out_of_range("ObjectiveEval: state out of range");
  }
  return objective.At(x, objective.space().Index(profile));
}

std::size_t LocalProfileCount(const Neighborhood& players,
                              std::span<const std::size_t> cardinalities) {
  std::size_t count = 1;
  for (std::size_t p : players) count *= cardinalities[p];
  return count;
}

std::size_t LocalIndex(const ProfileSpace& space, std::size_t profile_index,
                       const Neighborhood& players) {
  std::size_t index = 0;
  for (std::size_t p : players) {
    index = index * space.cardinality(p) + space.StrategyAt(profile_index, p);
  }
  return index;
}

RationalVector LiftLocalUtility(std::span<const Rational> local,
                                const Neighborhood& players,
                                std::span<const std::size_t> cardinalities) {
  for (std::size_t p : players) {
    if (p >= cardinalities.size()) {
      throw std::out_of_range("LiftLocalUtility: player out of range");
    }
  }
  if (local.size() != LocalProfileCount(players, cardinalities)) {
    throw std::invalid_argument("LiftLocalUtility: local vector has length " +
                                std::to_string(local.size()) + ", expected " +
                                std::to_string(LocalProfileCount(players, cardinalities)));
  }
  ProfileSpace space(std::vector<std::size_t>(cardinalities.begin(), cardinalities.end()));
  RationalVector full(space.size());
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    full[idx] = local[LocalIndex(space, idx, players)];
  }
  return full;
}

bool DependsOnlyOn(std::span<const Rational> values, const Neighborhood& players,
                   const ProfileSpace& space) {
  std::vector<const Rational*> seen(LocalProfileCount(players, space.cardinalities()),
                                    nullptr);
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    const Rational*& slot = seen[LocalIndex(space, idx, players)];
    if (slot == nullptr) {
      slot = &values[idx];
    } else if (*slot != values[idx]) {
      return false;
    }
  }
  return true;
}

}  // namespace potgame
