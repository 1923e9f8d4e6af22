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

// State based potential games: designed state processes (SEP-1/SEP-2),
// state-dependent utility design, better reply with inertia and exact
// analysis of the joint (state, action) chain.
//
// State transition matrices are r × (r·k) with column x·k + a holding the
// law of x(t+1) given (x(t), a(t)) = (x, a). The action matrix M_F is
// k × (r·k) with column x·k + a holding the law of a(t+1) given
// x(t+1) = x and a(t) = a.

#ifndef POTGAME_STATE_BASED_H_
#define POTGAME_STATE_BASED_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "potgame/game.h"
#include "potgame/markov.h"
#include "potgame/potential.h"
#include "potgame/stp.h"
#include "potgame/trace.h"

namespace potgame {

enum class Sep {
  kSep1,  // move uniformly to a strictly better state, else stay
  kSep2,  // move uniformly among weakly better states (including x)
};

RationalVector Sep1Distribution(const ObjectiveFunction& objective, std::size_t state,
                                std::size_t profile_index);
RationalVector Sep2Distribution(const ObjectiveFunction& objective, std::size_t state,
                                std::size_t profile_index);
StochasticMatrix BuildMP(const ObjectiveFunction& objective, Sep sep);

// First (state, player) whose block V^φ_x is outside
// rowspace([Γ_{U^x(i)}; E_i^T]), or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> FirstUndesignableStatePlayer(
    const ObjectiveFunction& objective, std::span<const NetworkTopology> per_state);
bool CheckStateDesignability(const ObjectiveFunction& objective,
                             std::span<const NetworkTopology> per_state);
// diag(B_0, ..., B_{r-1}) with B_x the designability basis of state x.
RationalMatrix StateDesignabilityBasis(const ObjectiveFunction& objective,
                                       std::span<const NetworkTopology> per_state);
std::optional<std::vector<UtilityDesign>> DesignStateUtilities(
    const ObjectiveFunction& objective, std::span<const NetworkTopology> per_state);

// c_i(x, a) = 2·1{a_i = 0} + Σ_{j ∈ U^x(i)\{i}} 1{a_j = a_i}; returned as
// [state][player] full structure vectors.
std::vector<std::vector<RationalVector>> ConsensusUtilities(
    std::span<const NetworkTopology> per_state, std::span<const std::size_t> cardinalities);

class StateBasedGame {
 public:
  // utilities[x][i] is the full structure vector of c_i(x, ·).
  StateBasedGame(ObjectiveFunction objective, std::vector<NetworkTopology> topologies,
                 std::vector<std::vector<RationalVector>> utilities,
                 StochasticMatrix state_transition, Rational epsilon,
                 std::vector<std::string> state_labels = {});

  std::size_t players() const { return objective_.space().players(); }
  std::size_t states() const { return objective_.state_count(); }
  std::size_t profile_count() const { return objective_.profile_count(); }
  const ProfileSpace& space() const { return objective_.space(); }
  const ObjectiveFunction& objective() const { return objective_; }
  const std::vector<NetworkTopology>& topologies() const { return topologies_; }
  const std::vector<std::vector<RationalVector>>& utilities() const {
    return utilities_;
  }
  const StochasticMatrix& state_transition() const { return mp_; }
  const Rational& epsilon() const { return epsilon_; }
  const std::vector<std::string>& state_labels() const { return labels_; }

  const Rational& Utility(std::size_t state, std::size_t player,
                          std::size_t profile_index) const {
    return utilities_[state][player][profile_index];
  }
  FiniteGame GameAt(std::size_t state) const;

 private:
  ObjectiveFunction objective_;
  std::vector<NetworkTopology> topologies_;
  std::vector<std::vector<RationalVector>> utilities_;
  StochasticMatrix mp_;
  Rational epsilon_;
  std::vector<std::string> labels_;
};

// c_i(x, a_i', a_-i) - c_i(x, a) = φ(x, a_i', a_-i) - φ(x, a) everywhere.
bool VerifyStateDifferences(const StateBasedGame& game);
// φ(x', a) ≥ φ(x, a) for every x' in the support of P(x, a).
bool VerifyStateMonotone(const StateBasedGame& game);
bool VerifyStateBasedPotential(const StateBasedGame& game);

// Better reply with inertia for player i at x(t) = state, a(t-1) = profile.
RationalVector BetterReplyDistribution(const StateBasedGame& game, std::size_t player,
                                       std::size_t state, std::size_t profile_index);
StochasticMatrix BuildMF(const StateBasedGame& game);

// X(a|x): states reachable from x under the state process with a frozen.
std::set<std::size_t> ReachableStates(const StateBasedGame& game,
                                      std::size_t profile_index, std::size_t state);

struct RecurrentStateEquilibrium {
  StrategyProfile action;
  std::set<std::size_t> states;
  friend bool operator==(const RecurrentStateEquilibrium&,
                         const RecurrentStateEquilibrium&) = default;
};
// Exhaustive scan; pairs with the same action and the same X(a|x) are
// grouped into one action-invariant state set.
std::vector<RecurrentStateEquilibrium> RecurrentStateEquilibria(
    const StateBasedGame& game);

// Chain over pairs (x, a), indexed x·k + a: x(t+1) ~ M_P, then
// a(t+1) ~ M_F(x(t+1), a(t)).
struct JointChain {
  StochasticMatrix transition;
  std::size_t states = 0;
  std::size_t profiles = 0;

  std::size_t PairIndex(std::size_t state, std::size_t profile_index) const {
    return state * profiles + profile_index;
  }
};
JointChain BuildJointChain(const StateBasedGame& game);

// Runs exactly max_steps transitions; converged_at marks the first entry into
// the invariant set of a recurrent state equilibrium.
SimulationTrace SimulateStateBased(const StateBasedGame& game, std::size_t initial_state,
                                   std::span<const std::size_t> initial_profile,
                                   std::size_t max_steps, std::uint64_t seed);

}  // namespace potgame

#endif  // POTGAME_STATE_BASED_H_
