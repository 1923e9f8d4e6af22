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

#include "potgame/state_based.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "potgame/random.h"

namespace potgame {

namespace {

RationalVector UniformOver(std::size_t size, const std::vector<std::size_t>& support) {
  RationalVector dist(size);
  const Rational share(1, static_cast<unsigned long>(support.size()));
  for (std::size_t s : support) dist[s] = share;
  return dist;
}

void RequireStateBased(const ObjectiveFunction& objective) {
  if (!objective.state_based()) {
    throw std::invalid_argument("expected a state based objective");
  }
}

void RequireTopologies(const ObjectiveFunction& objective,
                       std::span<const NetworkTopology> per_state) {
  RequireStateBased(objective);
  if (per_state.size() != objective.state_count()) {
    throw std::invalid_argument("need one topology per state: got " +
                                std::to_string(per_state.size()) + ", expected " +
                                std::to_string(objective.state_count()));
  }
}

bool NashAt(const StateBasedGame& game, std::size_t state, std::size_t profile_index) {
  const ProfileSpace& space = game.space();
  for (std::size_t i = 0; i < game.players(); ++i) {
    const Rational& current = game.Utility(state, i, profile_index);
    for (std::size_t s = 0; s < space.cardinality(i); ++s) {
      if (game.Utility(state, i, space.WithStrategy(profile_index, i, s)) > current) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

RationalVector Sep1Distribution(const ObjectiveFunction& objective, std::size_t state,
                                std::size_t profile_index) {
  RequireStateBased(objective);
  const Rational& here = objective.At(state, profile_index);
  std::vector<std::size_t> better;
  for (std::size_t x = 0; x < objective.state_count(); ++x) {
    if (objective.At(x, profile_index) > here) better.push_back(x);
  }
  if (better.empty()) better.push_back(state);
  return UniformOver(objective.state_count(), better);
}

RationalVector Sep2Distribution(const ObjectiveFunction& objective, std::size_t state,
                                std::size_t profile_index) {
  RequireStateBased(objective);
  const Rational& here = objective.At(state, profile_index);
  std::vector<std::size_t> weakly_better;
  for (std::size_t x = 0; x < objective.state_count(); ++x) {
    if (objective.At(x, profile_index) >= here) weakly_better.push_back(x);
  }
  return UniformOver(objective.state_count(), weakly_better);
}

StochasticMatrix BuildMP(const ObjectiveFunction& objective, Sep sep) {
  RequireStateBased(objective);
  const std::size_t r = objective.state_count(), k = objective.profile_count();
  RationalMatrix mp(r, r * k);
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t a = 0; a < k; ++a) {
      const RationalVector dist = sep == Sep::kSep1 ? Sep1Distribution(objective, x, a)
                                                    : Sep2Distribution(objective, x, a);
      for (std::size_t y = 0; y < r; ++y) mp(y, x * k + a) = dist[y];
    }
  }
  return StochasticMatrix(std::move(mp));
}

std::optional<std::pair<std::size_t, std::size_t>> FirstUndesignableStatePlayer(
    const ObjectiveFunction& objective, std::span<const NetworkTopology> per_state) {
  RequireTopologies(objective, per_state);
  const auto& card = objective.space().cardinalities();
  for (std::size_t x = 0; x < objective.state_count(); ++x) {
    if (auto player = FirstUndesignablePlayer(objective.Block(x), per_state[x], card)) {
      return std::make_pair(x, *player);
    }
  }
  return std::nullopt;
}

bool CheckStateDesignability(const ObjectiveFunction& objective,
                             std::span<const NetworkTopology> per_state) {
  return !FirstUndesignableStatePlayer(objective, per_state).has_value();
}

RationalMatrix StateDesignabilityBasis(const ObjectiveFunction& objective,
                                       std::span<const NetworkTopology> per_state) {
  RequireTopologies(objective, per_state);
  std::vector<RationalMatrix> blocks;
  for (const NetworkTopology& topology : per_state) {
    RationalMatrix b = DesignabilityBasis(topology, objective.space().cardinalities());
    // A zero subspace still owns k columns of the block diagonal.
    if (b.rows() == 0) b = RationalMatrix(0, objective.profile_count());
    blocks.push_back(std::move(b));
  }
  return BlockDiagonal(blocks);
}

std::optional<std::vector<UtilityDesign>> DesignStateUtilities(
    const ObjectiveFunction& objective, std::span<const NetworkTopology> per_state) {
  RequireTopologies(objective, per_state);
  std::vector<UtilityDesign> designs;
  for (std::size_t x = 0; x < objective.state_count(); ++x) {
    auto design = DesignUtilities(objective.Block(x), per_state[x],
                                  objective.space().cardinalities());
    if (!design) return std::nullopt;
    designs.push_back(std::move(*design));
  }
  return designs;
}

std::vector<std::vector<RationalVector>> ConsensusUtilities(
    std::span<const NetworkTopology> per_state, std::span<const std::size_t> cardinalities) {
  ProfileSpace space(std::vector<std::size_t>(cardinalities.begin(), cardinalities.end()));
  std::vector<std::vector<RationalVector>> out;
  for (const NetworkTopology& topology : per_state) {
    std::vector<RationalVector> per_player(space.players(), RationalVector(space.size()));
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
      for (std::size_t i = 0; i < space.players(); ++i) {
        const std::size_t ai = space.StrategyAt(idx, i);
        Rational c = ai == 0 ? 2 : 0;
        for (std::size_t j : topology.neighborhood(i)) {
          if (j != i && space.StrategyAt(idx, j) == ai) c += 1;
        }
        per_player[i][idx] = c;
      }
    }
    out.push_back(std::move(per_player));
  }
  return out;
}

StateBasedGame::StateBasedGame(ObjectiveFunction objective,
                               std::vector<NetworkTopology> topologies,
                               std::vector<std::vector<RationalVector>> utilities,
                               StochasticMatrix state_transition, Rational epsilon,
                               std::vector<std::string> state_labels)
    : objective_(std::move(objective)),
      topologies_(std::move(topologies)),
      utilities_(std::move(utilities)),
      mp_(std::move(state_transition)),
      epsilon_(std::move(epsilon)),
      labels_(std::move(state_labels)) {
  RequireTopologies(objective_, topologies_);
  const std::size_t r = states(), n = players(), k = profile_count();
  for (const auto& t : topologies_) {
    if (t.nodes() != n) throw std::invalid_argument("StateBasedGame: topology size mismatch");
  }
  if (utilities_.size() != r) {
    throw std::invalid_argument("StateBasedGame: need utilities for every state");
  }
  for (const auto& per_player : utilities_) {
    if (per_player.size() != n) {
      throw std::invalid_argument("StateBasedGame: need a utility for every player");
    }
    for (const auto& u : per_player) {
      if (u.size() != k) throw std::invalid_argument("StateBasedGame: utility length mismatch");
    }
  }
  if (mp_.rows() != r || mp_.cols() != r * k) {
    throw std::invalid_argument("StateBasedGame: M_P must be r x (r*k)");
  }
  if (sgn(epsilon_) <= 0 || epsilon_ >= 1) {
    throw std::invalid_argument("StateBasedGame: epsilon must lie in (0, 1)");
  }
  if (labels_.empty()) {
    for (std::size_t x = 0; x < r; ++x) labels_.push_back("x" + std::to_string(x + 1));
  }
  if (labels_.size() != r) throw std::invalid_argument("StateBasedGame: label count mismatch");
}

FiniteGame StateBasedGame::GameAt(std::size_t state) const {
  return FiniteGame(space().cardinalities(), utilities_.at(state));
}

bool VerifyStateDifferences(const StateBasedGame& game) {
  const ProfileSpace& space = game.space();
  const ObjectiveFunction& phi = game.objective();
  for (std::size_t x = 0; x < game.states(); ++x) {
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
      for (std::size_t i = 0; i < game.players(); ++i) {
        for (std::size_t s = 0; s < space.cardinality(i); ++s) {
          const std::size_t dev = space.WithStrategy(idx, i, s);
          if (game.Utility(x, i, dev) - game.Utility(x, i, idx) !=
              phi.At(x, dev) - phi.At(x, idx)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool VerifyStateMonotone(const StateBasedGame& game) {
  const std::size_t k = game.profile_count();
  const ObjectiveFunction& phi = game.objective();
  for (std::size_t x = 0; x < game.states(); ++x) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t y = 0; y < game.states(); ++y) {
        if (sgn(game.state_transition()(y, x * k + a)) > 0 && phi.At(y, a) < phi.At(x, a)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool VerifyStateBasedPotential(const StateBasedGame& game) {
  return VerifyStateDifferences(game) && VerifyStateMonotone(game);
}

RationalVector BetterReplyDistribution(const StateBasedGame& game, std::size_t player,
                                       std::size_t state, std::size_t profile_index) {
  const ProfileSpace& space = game.space();
  const std::size_t current = space.StrategyAt(profile_index, player);
  const Rational& now = game.Utility(state, player, profile_index);
  std::vector<std::size_t> better;
  for (std::size_t s = 0; s < space.cardinality(player); ++s) {
    if (game.Utility(state, player, space.WithStrategy(profile_index, player, s)) > now) {
      better.push_back(s);
    }
  }
  RationalVector dist(space.cardinality(player));
  if (better.empty()) {
    dist[current] = 1;
    return dist;
  }
  dist[current] = game.epsilon();
  const Rational share =
      (1 - game.epsilon()) / Rational(static_cast<unsigned long>(better.size()));
  for (std::size_t s : better) dist[s] = share;
  return dist;
}

StochasticMatrix BuildMF(const StateBasedGame& game) {
  const ProfileSpace& space = game.space();
  const std::size_t k = space.size(), n = game.players();
  RationalMatrix mf(k, game.states() * k);
  for (std::size_t x = 0; x < game.states(); ++x) {
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<RationalVector> laws;
      for (std::size_t i = 0; i < n; ++i) {
        laws.push_back(BetterReplyDistribution(game, i, x, a));
      }
      for (std::size_t b = 0; b < k; ++b) {
        Rational p = 1;
        for (std::size_t i = 0; i < n && sgn(p) != 0; ++i) {
          p *= laws[i][space.StrategyAt(b, i)];
        }
        mf(b, x * k + a) = p;
      }
    }
  }
  return StochasticMatrix(std::move(mf));
}

std::set<std::size_t> ReachableStates(const StateBasedGame& game,
                                      std::size_t profile_index, std::size_t state) {
  const std::size_t k = game.profile_count();
  std::set<std::size_t> reached{state};
  std::vector<std::size_t> frontier{state};
  while (!frontier.empty()) {
    const std::size_t x = frontier.back();
    frontier.pop_back();
    for (std::size_t y = 0; y < game.states(); ++y) {
      if (sgn(game.state_transition()(y, x * k + profile_index)) > 0 &&
          reached.insert(y).second) {
        frontier.push_back(y);
      }
    }
  }
  return reached;
}

std::vector<RecurrentStateEquilibrium> RecurrentStateEquilibria(
    const StateBasedGame& game) {
  std::vector<RecurrentStateEquilibrium> out;
  for (std::size_t a = 0; a < game.profile_count(); ++a) {
    std::map<std::set<std::size_t>, std::set<std::size_t>> groups;
    for (std::size_t x_star = 0; x_star < game.states(); ++x_star) {
      const std::set<std::size_t> reach = ReachableStates(game, a, x_star);
      const bool recurrent = std::all_of(reach.begin(), reach.end(), [&](std::size_t x) {
        return ReachableStates(game, a, x).contains(x_star);
      });
      if (!recurrent) continue;
      const bool stable = std::all_of(reach.begin(), reach.end(),
                                      [&](std::size_t x) { return NashAt(game, x, a); });
      if (stable) groups[reach].insert(x_star);
    }
    for (auto& [reach, states] : groups) {
      out.push_back({game.space().Profile(a), std::move(states)});
    }
  }
  return out;
}

JointChain BuildJointChain(const StateBasedGame& game) {
  const std::size_t r = game.states(), k = game.profile_count();
  const StochasticMatrix mf = BuildMF(game);
  const StochasticMatrix& mp = game.state_transition();
  RationalMatrix t(r * k, r * k);
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t a = 0; a < k; ++a) {
      const std::size_t from = x * k + a;
      for (std::size_t y = 0; y < r; ++y) {
        const Rational& p_state = mp(y, from);
        if (sgn(p_state) == 0) continue;
        for (std::size_t b = 0; b < k; ++b) {
          const Rational& p_action = mf(b, y * k + a);
          if (sgn(p_action) != 0) t(y * k + b, from) += p_state * p_action;
        }
      }
    }
  }
  return JointChain{StochasticMatrix(std::move(t)), r, k};
}

SimulationTrace SimulateStateBased(const StateBasedGame& game, std::size_t initial_state,
                                   std::span<const std::size_t> initial_profile,
                                   std::size_t max_steps, std::uint64_t seed) {
  if (max_steps == 0) {
    throw std::invalid_argument("SimulateStateBased: max_steps must be >= 1");
  }
  if (initial_state >= game.states()) {
    throw std::out_of_range("SimulateStateBased: initial state out of range");
  }
  const ProfileSpace& space = game.space();
  const std::size_t k = space.size(), n = game.players();
  std::set<std::pair<std::size_t, std::size_t>> invariant;
  for (const auto& eq : RecurrentStateEquilibria(game)) {
    const std::size_t a = space.Index(eq.action);
    for (std::size_t x : eq.states) invariant.emplace(x, a);
  }

  SimulationTrace trace;
  trace.seed = seed;
  std::size_t x = initial_state;
  std::size_t a = space.Index(initial_profile);
  auto record = [&](std::size_t t) {
    trace.steps.push_back({t, x, space.Profile(a), game.objective().At(x, a)});
    if (!trace.converged_at && invariant.contains({x, a})) trace.converged_at = t;
  };
  record(0);
  for (std::size_t t = 0; t < max_steps; ++t) {
    RandomStream state_rng(seed, n, t);
    x = state_rng.Sample(game.state_transition().matrix().col(x * k + a));
    std::size_t next = a;
    for (std::size_t i = 0; i < n; ++i) {
      RandomStream rng(seed, i, t);
      next = space.WithStrategy(next, i, rng.Sample(BetterReplyDistribution(game, i, x, a)));
    }
    a = next;
    record(t + 1);
  }
  return trace;
}

}  // namespace potgame
