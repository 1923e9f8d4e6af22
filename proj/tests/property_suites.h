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

// Randomized property suites shared by the unit tests and the acceptance
// binary. Each suite reports how many generated instances violated it.

#ifndef POTGAME_TESTS_PROPERTY_SUITES_H_
#define POTGAME_TESTS_PROPERTY_SUITES_H_

#include <functional>
#include <string>
#include <vector>

#include "oracles.h"
#include "potgame/dynamics.h"
#include "potgame/game.h"
#include "potgame/potential.h"
#include "potgame/state_based.h"
#include "potgame/stp.h"

namespace suites {

using potgame::Rational;
using potgame::RationalMatrix;
using potgame::RationalVector;

struct SuiteResult {
  std::string name;
  int instances = 0;
  int failures = 0;
};

inline RationalMatrix RandomMatrix(oracle::Generator& gen, std::size_t r, std::size_t c) {
  return oracle::ToRational(gen.Matrix(r, c, -4, 4));
}

// Random probability vector with small denominators.
inline RationalVector RandomDistribution(oracle::Generator& gen, std::size_t n) {
  std::vector<long long> w(n);
  long long total = 0;
  for (auto& v : w) total += (v = gen.Int(0, 4));
  if (total == 0) {
    w[gen.Size(0, n - 1)] = 1;
    total = 1;
  }
  RationalVector out;
  for (long long v : w) out.push_back(Rational(static_cast<long>(v)) / static_cast<long>(total));
  return out;
}

inline RationalMatrix KronAll(const std::vector<RationalMatrix>& factors) {
  return potgame::Kron(std::span<const RationalMatrix>(factors));
}

inline SuiteResult StpAssociativity(std::uint64_t seed, int count) {
  oracle::Generator gen(seed);
  SuiteResult res{"STP associativity", count, 0};
  const std::size_t dims[] = {1, 2, 3, 4, 6};
  auto pick = [&] { return dims[gen.Size(0, 4)]; };
  for (int t = 0; t < count; ++t) {
    const RationalMatrix a = RandomMatrix(gen, pick(), pick());
    const RationalMatrix b = RandomMatrix(gen, pick(), pick());
    const RationalMatrix c = RandomMatrix(gen, pick(), pick());
    const RationalMatrix left = potgame::Stp(potgame::Stp(a, b), c);
    const RationalMatrix right = potgame::Stp(a, potgame::Stp(b, c));
    const bool oracle_agrees =
        oracle::ToRational(oracle::SemiTensor(oracle::FromRational(a), oracle::FromRational(b))) ==
        potgame::Stp(a, b);
    if (left != right || !oracle_agrees) ++res.failures;
  }
  return res;
}

// Z ⋉ A = (I_t ⊗ A) ⋉ Z for a column Z, and A ⋉ Z = Z ⋉ (I_t ⊗ A) for a row Z.
inline SuiteResult StpCommutation(std::uint64_t seed, int count) {
  oracle::Generator gen(seed);
  SuiteResult res{"STP commutation with vectors", count, 0};
  for (int t = 0; t < count; ++t) {
    const RationalMatrix a = RandomMatrix(gen, gen.Size(1, 4), gen.Size(1, 4));
    const std::size_t len = gen.Size(1, 5);
    const RationalMatrix ita = potgame::Kron(RationalMatrix::Identity(len), a);
    const RationalMatrix col = RandomMatrix(gen, len, 1);
    const RationalMatrix row = RandomMatrix(gen, 1, len);
    if (potgame::Stp(col, a) != potgame::Stp(ita, col) ||
        potgame::Stp(a, row) != potgame::Stp(row, ita)) {
      ++res.failures;
    }
  }
  return res;
}

inline SuiteResult SwapOrthogonality(std::uint64_t seed, int count) {
  oracle::Generator gen(seed);
  SuiteResult res{"swap matrix orthogonality", count, 0};
  for (int t = 0; t < count; ++t) {
    const std::size_t m = gen.Size(1, 6), n = gen.Size(1, 6);
    const RationalMatrix w = potgame::SwapMatrix(m, n).ToDense();
    const RationalMatrix w_nm = potgame::SwapMatrix(n, m).ToDense();
    const auto inv = potgame::Inverse(w);
    if (!inv || w.Transpose() != *inv || *inv != w_nm) ++res.failures;
  }
  return res;
}

inline SuiteResult SwapExchangesFactors(std::uint64_t seed, int count) {
  oracle::Generator gen(seed);
  SuiteResult res{"swap matrix exchanges factors", count, 0};
  for (int t = 0; t < count; ++t) {
    const std::size_t m = gen.Size(1, 5), n = gen.Size(1, 5);
    const RationalMatrix w = potgame::SwapMatrix(m, n).ToDense();
    const RationalMatrix x = RandomMatrix(gen, m, 1), y = RandomMatrix(gen, n, 1);
    const RationalMatrix xr = RandomMatrix(gen, 1, m), yr = RandomMatrix(gen, 1, n);
    const bool columns = potgame::Stp(potgame::Stp(w, x), y) == potgame::Stp(y, x);
    const bool rows = potgame::Stp(potgame::Stp(xr, yr), w) == potgame::Stp(yr, xr);
    if (!columns || !rows) ++res.failures;
  }
  return res;
}

// ⋉_{j ∈ U} a_j = Γ_U ⋉_i a_i, for pure and for stochastic factors.
inline SuiteResult DrawingMatrixProjection(std::uint64_t seed, int count) {
  oracle::Generator gen(seed);
  SuiteResult res{"drawing matrix projection (pure and stochastic)", count, 0};
  for (int t = 0; t < count; ++t) {
    const std::size_t n = gen.Size(1, 4);
    const auto k = gen.Cardinalities(n, 2, 3);
    std::set<std::size_t> u;
    for (std::size_t i = 0; i < n; ++i) {
      if (gen.Coin()) u.insert(i);
    }
    const RationalMatrix gamma = potgame::DrawingMatrix(u, k);
    bool ok = true;
    for (const bool stochastic : {false, true}) {
      std::vector<RationalMatrix> all, sub;
      for (std::size_t i = 0; i < n; ++i) {
        RationalVector v(k[i]);
        if (stochastic) {
          v = RandomDistribution(gen, k[i]);
        } else {
          v[gen.Size(0, k[i] - 1)] = 1;
        }
        all.push_back(RationalMatrix::Column(v));
        if (u.contains(i)) sub.push_back(all.back());
      }
      const RationalMatrix lhs = sub.empty() ? RationalMatrix::Identity(1) : KronAll(sub);
      if (gamma * KronAll(all) != lhs) ok = false;
    }
    if (!ok) ++res.failures;
  }
  return res;
}

inline potgame::FiniteGame MakeGame(const std::vector<std::size_t>& k,
                                    const std::vector<std::vector<long long>>& c) {
  return potgame::FiniteGame(k, oracle::ToRationalPayoffs(c));
}

// Any two potentials of one game differ by a constant.
inline SuiteResult PotentialUniqueUpToConstant(std::uint64_t seed, int count) {
  oracle::Generator gen(seed);
  SuiteResult res{"potential unique up to a constant", count, 0};
  for (int t = 0; t < count; ++t) {
    const auto k = gen.Cardinalities(gen.Size(2, 3), 2, 3);
    const auto c = gen.PotentialPayoffs(k);
    const potgame::FiniteGame game = MakeGame(k, c);
    const auto cert = potgame::IsPotential(game);
    const auto brute = oracle::BruteForcePotential(k, c);
    if (!cert || !brute) {
      ++res.failures;
      continue;
    }
    const Rational offset = cert->potential[0] - Rational(static_cast<long>((*brute)[0]));
    bool constant = true;
    for (std::size_t a = 0; a < brute->size(); ++a) {
      constant = constant &&
                 cert->potential[a] - Rational(static_cast<long>((*brute)[a])) == offset;
    }
    if (!constant) ++res.failures;
  }
  return res;
}

// Every SEP-built M_P only moves to states with φ(x', a) ≥ φ(x, a).
inline SuiteResult SepMonotonicity(std::uint64_t seed, int count) {
  oracle::Generator gen(seed);
  SuiteResult res{"SEP state transitions never lower the objective", count, 0};
  for (int t = 0; t < count; ++t) {
    const auto k = gen.Cardinalities(gen.Size(1, 3), 2, 3);
    const std::size_t r = gen.Size(1, 4), profiles = oracle::ProfileCount(k);
    RationalVector values;
    for (std::size_t i = 0; i < r * profiles; ++i) values.emplace_back(static_cast<long>(gen.Int(-3, 3)));
    const auto phi = potgame::ObjectiveFunction::StateBased(values, k, r);
    bool ok = true;
    for (const auto sep : {potgame::Sep::kSep1, potgame::Sep::kSep2}) {
      const potgame::StochasticMatrix mp = potgame::BuildMP(phi, sep);
      for (std::size_t x = 0; x < r; ++x) {
        for (std::size_t a = 0; a < profiles; ++a) {
          for (std::size_t y = 0; y < r; ++y) {
            if (sgn(mp(y, x * profiles + a)) > 0 && phi.At(y, a) < phi.At(x, a)) ok = false;
          }
        }
      }
    }
    if (!ok) ++res.failures;
  }
  return res;
}

// Sequential MBRA never lowers the potential of a potential game.
inline SuiteResult SequentialMbraMonotone(std::uint64_t seed, int count) {
  oracle::Generator gen(seed);
  SuiteResult res{"sequential MBRA raises the potential monotonically", count, 0};
  for (int t = 0; t < count; ++t) {
    const auto k = gen.Cardinalities(gen.Size(2, 3), 2, 3);
    const auto c = gen.PotentialPayoffs(k);
    const auto p = *oracle::BruteForcePotential(k, c);
    const auto cadence = gen.Coin() ? potgame::Cadence::kRoundRobin : potgame::Cadence::kRandom;
    const potgame::MbraDynamics dyn(MakeGame(k, c),
                                    {potgame::InformationMode::kGlobal, cadence,
                                     static_cast<std::uint64_t>(gen.Int(0, 1 << 30))});
    std::vector<std::size_t> start(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) start[i] = gen.Size(0, k[i] - 1);
    const potgame::SimulationTrace trace = dyn.Simulate(start, 60);
    bool ok = true;
    for (std::size_t s = 1; s < trace.steps.size(); ++s) {
      const std::size_t before = oracle::Encode(trace.steps[s - 1].profile, k);
      const std::size_t after = oracle::Encode(trace.steps[s].profile, k);
      if (p[after] < p[before]) ok = false;
    }
    // Finite improvement: a sequential run must settle well inside 60 steps.
    if (!trace.converged_at) ok = false;
    if (!ok) ++res.failures;
  }
  return res;
}

inline SuiteResult FixedPointIffNash(std::uint64_t seed, int count) {
  oracle::Generator gen(seed);
  SuiteResult res{"MBRA fixed point iff pure Nash", count, 0};
  for (int t = 0; t < count; ++t) {
    const auto k = gen.Cardinalities(gen.Size(1, 3), 2, 3);
    // Narrow payoff ranges produce ties, which exercise the keep-if-best rule.
    const auto c = gen.Payoffs(k, -2, 2);
    const potgame::MbraDynamics dyn(MakeGame(k, c), {});
    bool ok = true;
    for (std::size_t a = 0; a < oracle::ProfileCount(k); ++a) {
      if (dyn.IsFixedPoint(a) != oracle::BruteForceNash(k, c, a)) ok = false;
    }
    if (!ok) ++res.failures;
  }
  return res;
}

inline std::vector<SuiteResult> AllPropertySuites() {
  return {StpAssociativity(101, 150),        StpCommutation(102, 150),
          SwapOrthogonality(103, 120),       SwapExchangesFactors(104, 150),
          DrawingMatrixProjection(105, 150),      PotentialUniqueUpToConstant(106, 120),
          SepMonotonicity(107, 150),         SequentialMbraMonotone(108, 150),
          FixedPointIffNash(109, 150)};
}

// Potential-equation solvability against the brute-force definition check on
// mixed potential / generic random games with integer payoffs in [-5, 5].
struct EquivalenceResult {
  int games = 0;
  int agreements = 0;
  int potential_games = 0;
};

inline EquivalenceResult PotentialOracleEquivalence(std::uint64_t seed, int count) {
  oracle::Generator gen(seed);
  EquivalenceResult res;
  for (int t = 0; t < count; ++t) {
    const auto k = gen.Cardinalities(gen.Size(2, 3), 2, 3);
    // Half the instances are built to be potential so both verdicts occur.
    const auto c = gen.Coin() ? gen.PotentialPayoffs(k) : gen.Payoffs(k, -5, 5);
    const bool solver = potgame::IsPotential(MakeGame(k, c)).has_value();
    const bool brute = oracle::BruteForcePotential(k, c).has_value();
    ++res.games;
    if (solver == brute) ++res.agreements;
    if (brute) ++res.potential_games;
  }
  return res;
}

}  // namespace suites

#endif  // POTGAME_TESTS_PROPERTY_SUITES_H_
