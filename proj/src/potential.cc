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

#include "potgame/potential.h"

#include <string>

#include "potgame/stp.h"

namespace potgame {

namespace {

void RequireFixed(const ObjectiveFunction& objective) {
  if (objective.state_based()) {
    throw std::invalid_argument("expected a fixed-topology objective");
  }
}

void RequireMatchingTopology(const NetworkTopology& topology,
                             std::span<const std::size_t> cardinalities,
                             std::size_t objective_length) {
  if (topology.nodes() != cardinalities.size()) {
    throw std::invalid_argument("topology has " + std::to_string(topology.nodes()) +
                                " nodes, game has " +
                                std::to_string(cardinalities.size()) + " players");
  }
  std::size_t k = 1;
  for (std::size_t c : cardinalities) k *= c;
  if (objective_length != k) {
    throw std::invalid_argument("objective has length " +
                                std::to_string(objective_length) + ", expected " +
                                std::to_string(k));
  }
}

}  // namespace

PotentialEquation BuildPotentialEquation(const FiniteGame& game) {
  const std::size_t n = game.players();
  if (n < 2) throw SinglePlayerGameError();
  const std::size_t k = game.profile_count();
  const auto& card = game.cardinalities();

  PotentialEquation eq;
  eq.block_offsets.push_back(0);
  for (std::size_t i = 0; i < n; ++i) {
    eq.block_offsets.push_back(eq.block_offsets.back() + k / card[i]);
  }
  eq.coefficients = RationalMatrix((n - 1) * k, eq.block_offsets.back());
  eq.rhs.resize((n - 1) * k);

  const RationalMatrix e0 = EMatrix(0, card);
  for (std::size_t i = 1; i < n; ++i) {
    const RationalMatrix ei = EMatrix(i, card);
    const std::size_t row0 = (i - 1) * k;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < e0.cols(); ++c) {
        eq.coefficients(row0 + r, c) = -e0(r, c);
      }
      for (std::size_t c = 0; c < ei.cols(); ++c) {
        eq.coefficients(row0 + r, eq.block_offsets[i] + c) = ei(r, c);
      }
      eq.rhs[row0 + r] = game.Payoff(i, r) - game.Payoff(0, r);
    }
  }
  return eq;
}

PotentialCertificate CertificateFromSolution(const FiniteGame& game,
                                             std::span<const Rational> solution) {
  const auto& card = game.cardinalities();
  const std::size_t k = game.profile_count();
  PotentialCertificate cert;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < game.players(); ++i) {
    const std::size_t len = k / card[i];
    if (offset + len > solution.size()) {
      throw std::invalid_argument("CertificateFromSolution: solution too short");
    }
    cert.xi.emplace_back(solution.begin() + static_cast<std::ptrdiff_t>(offset),
                         solution.begin() + static_cast<std::ptrdiff_t>(offset + len));
    offset += len;
  }
  if (offset != solution.size()) {
    throw std::invalid_argument("CertificateFromSolution: solution too long");
  }
  // ξ_0^T E_0^T = (E_0 ξ_0)^T.
  const RationalVector lifted = EMatrix(0, card) * std::span<const Rational>(cert.xi[0]);
  cert.potential = game.utility(0);
  for (std::size_t r = 0; r < k; ++r) cert.potential[r] -= lifted[r];
  return cert;
}

std::optional<PotentialCertificate> IsPotential(const FiniteGame& game) {
  if (game.players() == 1) {
    return PotentialCertificate{{RationalVector{}}, game.utility(0)};
  }
  const PotentialEquation eq = BuildPotentialEquation(game);
  auto solution = SolveLinear(eq.coefficients, eq.rhs);
  if (!solution) return std::nullopt;
  return CertificateFromSolution(game, *solution);
}

bool VerifyPotentialDef(const FiniteGame& game, std::span<const Rational> potential) {
  if (potential.size() != game.profile_count()) {
    throw std::invalid_argument("VerifyPotentialDef: potential has wrong length");
  }
  const ProfileSpace& space = game.space();
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    for (std::size_t i = 0; i < game.players(); ++i) {
      // Comparing every deviation against the current profile covers all
      // (α, β) pairs by transitivity.
      for (std::size_t s = 0; s < space.cardinality(i); ++s) {
        const std::size_t dev = space.WithStrategy(idx, i, s);
        if (game.Payoff(i, dev) - game.Payoff(i, idx) !=
            potential[dev] - potential[idx]) {
          return false;
        }
      }
    }
  }
  return true;
}

RationalVector NormalizePotential(std::span<const Rational> potential) {
  RationalVector out(potential.begin(), potential.end());
  if (out.empty()) return out;
  const Rational base = out.front();
  for (auto& v : out) v -= base;
  return out;
}

RationalMatrix DesignabilityBlock(const Neighborhood& neighborhood, std::size_t player,
                                  std::span<const std::size_t> cardinalities) {
  return VStack(DrawingMatrix(neighborhood, cardinalities),
                EMatrix(player, cardinalities).Transpose());
}

RationalMatrix DesignabilityBasis(const NetworkTopology& topology,
                                  std::span<const std::size_t> cardinalities) {
  if (topology.nodes() != cardinalities.size() || cardinalities.empty()) {
    throw std::invalid_argument("DesignabilityBasis: topology/cardinality mismatch");
  }
  RationalMatrix basis =
      RowSpaceBasis(DesignabilityBlock(topology.neighborhood(0), 0, cardinalities));
  for (std::size_t i = 1; i < topology.nodes(); ++i) {
    basis = RowSpaceIntersection(
        basis, DesignabilityBlock(topology.neighborhood(i), i, cardinalities));
  }
  return basis;
}

std::optional<std::size_t> FirstUndesignablePlayer(
    std::span<const Rational> objective, const NetworkTopology& topology,
    std::span<const std::size_t> cardinalities) {
  RequireMatchingTopology(topology, cardinalities, objective.size());
  for (std::size_t i = 0; i < topology.nodes(); ++i) {
    if (!InRowSpace(objective,
                    DesignabilityBlock(topology.neighborhood(i), i, cardinalities))) {
      return i;
    }
  }
  return std::nullopt;
}

bool CheckDesignability(const ObjectiveFunction& objective,
                        const NetworkTopology& topology) {
  RequireFixed(objective);
  return !FirstUndesignablePlayer(objective.values(), topology,
                                  objective.space().cardinalities())
              .has_value();
}

FiniteGame UtilityDesign::LiftedGame(std::span<const std::size_t> cardinalities) const {
  std::vector<RationalVector> full;
  for (std::size_t i = 0; i < local.size(); ++i) {
    full.push_back(LiftLocalUtility(local[i], neighborhoods[i], cardinalities));
  }
  return FiniteGame(std::vector<std::size_t>(cardinalities.begin(), cardinalities.end()),
                    std::move(full));
}

std::optional<UtilityDesign> DesignUtilities(std::span<const Rational> objective,
                                             const NetworkTopology& topology,
                                             std::span<const std::size_t> cardinalities) {
  RequireMatchingTopology(topology, cardinalities, objective.size());
  UtilityDesign design;
  for (std::size_t i = 0; i < topology.nodes(); ++i) {
    const Neighborhood& u = topology.neighborhood(i);
    // Unknowns [V^c_i, V^d_i] solve [Γ_U^T E_i] [V^c_i; V^d_i]^T = V^φ^T.
    const RationalMatrix gamma = DrawingMatrix(u, cardinalities);
    const RationalMatrix system =
        HStack(gamma.Transpose(), EMatrix(i, cardinalities));
    auto solution = SolveLinear(system, objective);
    if (!solution) return std::nullopt;
    const auto split = solution->begin() + static_cast<std::ptrdiff_t>(gamma.rows());
    design.neighborhoods.push_back(u);
    design.local.emplace_back(solution->begin(), split);
    design.residual.emplace_back(split, solution->end());
  }
  return design;
}

std::optional<UtilityDesign> DesignUtilities(const ObjectiveFunction& objective,
                                             const NetworkTopology& topology) {
  RequireFixed(objective);
  return DesignUtilities(objective.values(), topology,
                         objective.space().cardinalities());
}

ObjectiveFunction EdgePotentialObjective(const NetworkTopology& topology,
                                         const Fng& fng) {
  const auto cert = IsPotential(fng.AsGame());
  if (!cert) {
    throw std::invalid_argument("EdgePotentialObjective: FNG is not a potential game");
  }
  if (fng.row_strategies != fng.col_strategies) {
    throw std::invalid_argument("EdgePotentialObjective: FNG must be square");
  }
  ProfileSpace space(std::vector<std::size_t>(topology.nodes(), fng.row_strategies));
  RationalVector values(space.size());
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    for (auto [u, v] : topology.edges()) {
      values[idx] += cert->potential[space.StrategyAt(idx, u) * fng.col_strategies +
                                     space.StrategyAt(idx, v)];
    }
  }
  return ObjectiveFunction::Fixed(std::move(values), space.cardinalities());
}

}  // namespace potgame
