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

// Myopic best response adjustment (MBRA) on a fixed topology.
//
// A player whose current strategy is a best response keeps it; otherwise it
// moves to a best response chosen uniformly at random.

#ifndef POTGAME_DYNAMICS_H_
#define POTGAME_DYNAMICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "potgame/game.h"
#include "potgame/stp.h"
#include "potgame/trace.h"

namespace potgame {

enum class InformationMode { kGlobal, kLocal };

// Simultaneous: every player updates from a(t). RoundRobin: player t mod n
// updates. Random: one uniformly drawn player updates.
enum class Cadence { kSimultaneous, kRoundRobin, kRandom };

struct SurConfig {
  InformationMode information = InformationMode::kGlobal;
  Cadence cadence = Cadence::kRoundRobin;
  std::uint64_t seed = 0;
};

// argmax_s c_i(s, a_-i). In local mode the player cannot observe players
// outside U(i); their strategies are masked to 0 before evaluation.
std::vector<std::size_t> BestResponseSet(const FiniteGame& game, std::size_t player,
                                         std::span<const std::size_t> profile,
                                         InformationMode information,
                                         const NetworkTopology* topology = nullptr);

class MbraDynamics {
 public:
  MbraDynamics(FiniteGame game, SurConfig config,
               std::optional<NetworkTopology> topology = std::nullopt);

  const FiniteGame& game() const { return game_; }
  const SurConfig& config() const { return config_; }

  std::vector<std::size_t> BestResponses(std::size_t player,
                                         std::size_t profile_index) const;
  // Distribution of player's next strategy when it is allowed to move.
  RationalVector PlayerUpdate(std::size_t player, std::size_t profile_index) const;
  bool IsFixedPoint(std::size_t profile_index) const;

  // One application of the update rule at time t.
  std::size_t Step(std::size_t profile_index, std::uint64_t t) const;

  // Column j is the law of a(t+1) given a(t) = profile j. Round-robin is not
  // time-homogeneous and is rejected.
  StochasticMatrix TransitionMatrix() const;

  // Runs until a fixed point or max_steps transitions. objective may be null.
  SimulationTrace Simulate(std::span<const std::size_t> initial, std::size_t max_steps,
                           const ObjectiveFunction* objective = nullptr) const;

 private:
  FiniteGame game_;
  SurConfig config_;
  std::optional<NetworkTopology> topology_;
};

}  // namespace potgame

#endif  // POTGAME_DYNAMICS_H_
