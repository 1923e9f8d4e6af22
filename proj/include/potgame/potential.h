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

#ifndef POTGAME_POTENTIAL_H_
#define POTGAME_POTENTIAL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "potgame/game.h"
#include "potgame/ratmat.h"

namespace potgame {

// Raised when the potential equation is requested for a one-player game,
// where it has no rows. Such games are potential with P = c_0.
class SinglePlayerGameError : public std::domain_error {
 public:
  SinglePlayerGameError()
      : std::domain_error("potential equation undefined for a single player") {}
};

// The linear system whose solvability decides potentiality: block row i
// (i = 1..n-1) reads -E_0 ξ_0 + E_i ξ_i = (V^c_i - V^c_0)^T.
struct PotentialEquation {
  RationalMatrix coefficients;
  RationalVector rhs;
  // Offset of ξ_i inside the stacked unknown vector; size n + 1.
  std::vector<std::size_t> block_offsets;
};

PotentialEquation BuildPotentialEquation(const FiniteGame& game);

struct PotentialCertificate {
  std::vector<RationalVector> xi;
  // V_P = V^c_0 - ξ_0^T E_0^T.
  RationalVector potential;
};

// Splits a stacked solution into ξ_i and derives V_P from ξ_0.
PotentialCertificate CertificateFromSolution(const FiniteGame& game,
                                             std::span<const Rational> solution);

std::optional<PotentialCertificate> IsPotential(const FiniteGame& game);

// Checks c_i(α, s_-i) - c_i(β, s_-i) = P(α, s_-i) - P(β, s_-i) for every
// player, opponent profile and strategy pair.
bool VerifyPotentialDef(const FiniteGame& game, std::span<const Rational> potential);

// P - P(0, ..., 0) · 1.
RationalVector NormalizePotential(std::span<const Rational> potential);

// [Γ_U; E_i^T], the matrix whose row space holds every φ that player i can
// be given a U-local utility for.
RationalMatrix DesignabilityBlock(const Neighborhood& neighborhood, std::size_t player,
                                  std::span<const std::size_t> cardinalities);

// Basis of ∩_i rowspace([Γ_U(i); E_i^T]), folded over i = 0, 1, ...
RationalMatrix DesignabilityBasis(const NetworkTopology& topology,
                                  std::span<const std::size_t> cardinalities);

// First player i with V^φ outside rowspace([Γ_U(i); E_i^T]), or nullopt.
std::optional<std::size_t> FirstUndesignablePlayer(
    std::span<const Rational> objective, const NetworkTopology& topology,
    std::span<const std::size_t> cardinalities);

bool CheckDesignability(const ObjectiveFunction& objective,
                        const NetworkTopology& topology);

// V^φ = V^c_i Γ_U(i) + V^d_i E_i^T for every i.
struct UtilityDesign {
  std::vector<Neighborhood> neighborhoods;
  std::vector<RationalVector> local;     // length Π_{j ∈ U(i)} k_j
  std::vector<RationalVector> residual;  // length k / k_i

  FiniteGame LiftedGame(std::span<const std::size_t> cardinalities) const;
};

std::optional<UtilityDesign> DesignUtilities(std::span<const Rational> objective,
                                             const NetworkTopology& topology,
                                             std::span<const std::size_t> cardinalities);
std::optional<UtilityDesign> DesignUtilities(const ObjectiveFunction& objective,
                                             const NetworkTopology& topology);

// φ(a) = Σ_{(u,v) ∈ E} P(a_u, a_v) where P is the canonical potential of the
// FNG. Throws std::invalid_argument if the FNG is not a potential game.
ObjectiveFunction EdgePotentialObjective(const NetworkTopology& topology,
                                         const Fng& fng);

}  // namespace potgame

#endif  // POTGAME_POTENTIAL_H_
