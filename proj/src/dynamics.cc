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

#include "potgame/dynamics.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "potgame/random.h"

namespace potgame {

namespace {

std::vector<std::size_t> BestResponsesAt(const FiniteGame& game, std::size_t player,
                                         std::size_t profile_index,
                                         InformationMode information,
                                         const NetworkTopology* topology) {
  const ProfileSpace& space = game.space();
  std::size_t observed = profile_index;
  if (information == InformationMode::kLocal) {
    if (topology == nullptr) {
      throw std::invalid_argument("local information requires a topology");
    }
    const Neighborhood& u = topology->neighborhood(player);
    for (std::size_t j = 0; j < space.players(); ++j) {
      if (!u.contains(j)) observed = space.WithStrategy(observed, j, 0);
    }
  }
  std::vector<std::size_t> best;
  Rational best_value;
  for (std::size_t s = 0; s < space.cardinality(player); ++s) {
    const Rational& v = game.Payoff(player, space.WithStrategy(observed, player, s));
    if (best.empty() || v > best_value) {
      best = {s};
      best_value = v;
    } else if (v == best_value) {
      best.push_back(s);
    }
  }
  return best;
}

}  // namespace

std::vector<std::size_t> BestResponseSet(const FiniteGame& game, std::size_t player,
                                         std::span<const std::size_t> profile,
                                         InformationMode information,
                                         const NetworkTopology* topology) {
  if (player >= game.players()) throw std::out_of_range("player out of range");
  return BestResponsesAt(game, player, game.space().Index(profile), information,
                         topology);
}

MbraDynamics::MbraDynamics(FiniteGame game, SurConfig config,
                           std::optional<NetworkTopology> topology)
    : game_(std::move(game)), config_(config), topology_(std::move(topology)) {
  if (config_.information == InformationMode::kLocal && !topology_) {
    throw std::invalid_argument("MbraDynamics: local information requires a topology");
  }
  if (topology_ && topology_->nodes() != game_.players()) {
    throw std::invalid_argument("MbraDynamics: topology size mismatch");
  }
}

std::vector<std::size_t> MbraDynamics::BestResponses(std::size_t player,
                                                     std::size_t profile_index) const {
  return BestResponsesAt(game_, player, profile_index, config_.information,
                         topology_ ? &*topology_ : nullptr);
}

RationalVector MbraDynamics::PlayerUpdate(std::size_t player,
                                          std::size_t profile_index) const {
  const std::vector<std::size_t> best = BestResponses(player, profile_index);
  RationalVector dist(game_.space().cardinality(player));
  const std::size_t current = game_.space().StrategyAt(profile_index, player);
  if (std::find(best.begin(), best.end(), current) != best.end()) {
    dist[current] = 1;
  } else {
    const Rational share(1, static_cast<unsigned long>(best.size()));
    for (std::size_t s : best) dist[s] = share;
  }
  return dist;
}

bool MbraDynamics::IsFixedPoint(std::size_t profile_index) const {
  for (std::size_t i = 0; i < game_.players(); ++i) {
    const auto best = BestResponses(i, profile_index);
    if (std::find(best.begin(), best.end(),
                  game_.space().StrategyAt(profile_index, i)) == best.end()) {
      return false;
    }
  }
  return true;
}

std::size_t MbraDynamics::Step(std::size_t profile_index, std::uint64_t t) const {
  const ProfileSpace& space = game_.space();
  const std::size_t n = game_.players();
  auto move = [&](std::size_t player, std::size_t from) {
    RandomStream rng(config_.seed, player, t);
    const RationalVector dist = PlayerUpdate(player, from);
    return space.WithStrategy(from, player, rng.Sample(dist));
  };
  switch (config_.cadence) {
    case Cadence::kSimultaneous: {
      std::size_t next = profile_index;
      for (std::size_t i = 0; i < n; ++i) {
        next = space.WithStrategy(next, i,
                                  space.StrategyAt(move(i, profile_index), i));
      }
      return next;
    }
    case Cadence::kRoundRobin:
      return move(static_cast<std::size_t>(t % n), profile_index);
    case Cadence::kRandom: {
      RandomStream picker(config_.seed, n, t);
      return move(static_cast<std::size_t>(picker.Below(n)), profile_index);
    }
  }
  throw std::logic_error("unknown cadence");
}

StochasticMatrix MbraDynamics::TransitionMatrix() const {
  const ProfileSpace& space = game_.space();
  const std::size_t k = space.size(), n = game_.players();
  RationalMatrix l(k, k);
  switch (config_.cadence) {
    case Cadence::kRoundRobin:
      throw std::invalid_argument(
          "TransitionMatrix: round-robin cadence is not time-homogeneous");
    case Cadence::kSimultaneous:
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<RationalVector> laws;
        for (std::size_t i = 0; i < n; ++i) laws.push_back(PlayerUpdate(i, j));
        for (std::size_t to = 0; to < k; ++to) {
          Rational p = 1;
          for (std::size_t i = 0; i < n && sgn(p) != 0; ++i) {
            p *= laws[i][space.StrategyAt(to, i)];
          }
          l(to, j) = p;
        }
      }
      break;
    case Cadence::kRandom: {
      const Rational pick(1, static_cast<unsigned long>(n));
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
          const RationalVector law = PlayerUpdate(i, j);
          for (std::size_t s = 0; s < law.size(); ++s) {
            if (sgn(law[s]) != 0) l(space.WithStrategy(j, i, s), j) += pick * law[s];
          }
        }
      }
      break;
    }
  }
  return StochasticMatrix(std::move(l));
}

SimulationTrace MbraDynamics::Simulate(std::span<const std::size_t> initial,
                                       std::size_t max_steps,
                                       const ObjectiveFunction* objective) const {
  if (max_steps == 0) throw std::invalid_argument("Simulate: max_steps must be >= 1");
  if (objective && (objective->state_based() ||
                    objective->profile_count() != game_.profile_count())) {
    throw std::invalid_argument("Simulate: objective does not match the game");
  }
  SimulationTrace trace;
  trace.seed = config_.seed;
  std::size_t current = game_.space().Index(initial);
  std::set<std::size_t> seen;
  auto record = [&](std::size_t t) {
    TraceStep step;
    step.t = t;
    step.profile = game_.space().Profile(current);
    if (objective) step.objective = objective->At(0, current);
    trace.steps.push_back(std::move(step));
  };
  record(0);
  if (IsFixedPoint(current)) {
    trace.converged_at = 0;
    return trace;
  }
  seen.insert(current);
  for (std::size_t t = 0; t < max_steps; ++t) {
    current = Step(current, t);
    record(t + 1);
    if (IsFixedPoint(current)) {
      trace.converged_at = t + 1;
      break;
    }
    // Sequential cadences repeat profiles whenever the mover keeps its
    // strategy, so only simultaneous runs report cycles.
    if (config_.cadence == Cadence::kSimultaneous &&
        !seen.insert(current).second && !trace.revisited_at) {
      trace.revisited_at = t + 1;
    }
  }
  return trace;
}

}  // namespace potgame
