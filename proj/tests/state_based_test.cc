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

#include <gtest/gtest.h>

#include "oracles.h"
#include "potgame/definition.h"
#include "potgame/scenarios.h"

namespace potgame {
namespace {

StateBasedGame Consensus() { return ResolveStateGame(SwitchedConsensusDefinition()); }

const Rational kThird(1, 3);

TEST(Sep, HandDistributions) {
  // Two profiles, three states with φ(·, a=0) = (1, 3, 3), φ(·, a=1) = (2, 2, 1).
  const RationalVector v = {1, 2, 3, 2, 3, 1};
  const ObjectiveFunction phi = ObjectiveFunction::StateBased(v, {2}, 3);
  EXPECT_EQ(Sep1Distribution(phi, 0, 0), (RationalVector{0, Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(Sep1Distribution(phi, 1, 0), (RationalVector{0, 1, 0}));
  EXPECT_EQ(Sep2Distribution(phi, 1, 0), (RationalVector{0, Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(Sep2Distribution(phi, 0, 1), (RationalVector{Rational(1, 2), Rational(1, 2), 0}));
  EXPECT_EQ(Sep1Distribution(phi, 0, 1), (RationalVector{1, 0, 0}));
  const StochasticMatrix mp = BuildMP(phi, Sep::kSep2);
  EXPECT_EQ(mp.rows(), 3u);
  EXPECT_EQ(mp.cols(), 6u);
  EXPECT_EQ(mp(2, 2 * 2 + 1), kThird);  // x_3, a = 1: all states weakly better
}

TEST(Sep, PublishedTransitionBlocks) {
  const StateBasedGame game = Consensus();
  const auto blocks = reference::ConsensusTransitionBlocks();
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t a = 0; a < 16; ++a)
        EXPECT_EQ(game.state_transition()(y, x * 16 + a), blocks[x](y, a));
}

TEST(BetterReply, InertiaSplit) {
  const StateBasedGame game = Consensus();
  // x_1, a = (1,1,1,2): only agent 4 improves by switching to 1.
  const std::size_t a = game.space().Index(std::vector<std::size_t>{0, 0, 0, 1});
  EXPECT_EQ(BetterReplyDistribution(game, 3, 0, a),
            (RationalVector{Rational(9, 10), Rational(1, 10)}));
  EXPECT_EQ(BetterReplyDistribution(game, 0, 0, a), (RationalVector{1, 0}));
}

TEST(ActionMatrix, PublishedExcerptAndHiddenEntry) {
  const StochasticMatrix mf = BuildMF(Consensus());
  EXPECT_EQ(mf.rows(), 16u);
  EXPECT_EQ(mf.cols(), 48u);
  for (const auto& e : reference::ConsensusActionExcerpt()) {
    EXPECT_EQ(mf(e.row - 1, e.col - 1), e.value) << e.row << "," << e.col;
  }
  // Column 47 is (x_3, (2,2,2,1)); agents 1 and 3 both improve by moving to
  // 1, agent 2 is content in x_3, agent 4 keeps 1. Mass 0.81 lands on (1,2,1,1).
  EXPECT_EQ(mf(4, 46), Rational(81, 100));
}

TEST(StateDesign, PerStateMembershipAndExplicitDesign) {
  const StateBasedGame game = Consensus();
  EXPECT_TRUE(CheckStateDesignability(game.objective(), game.topologies()));
  EXPECT_FALSE(FirstUndesignableStatePlayer(game.objective(), game.topologies()).has_value());
  const RationalMatrix basis = StateDesignabilityBasis(game.objective(), game.topologies());
  EXPECT_EQ(basis.cols(), 48u);
  EXPECT_TRUE(InRowSpace(game.objective().values(), basis));
  const auto designs = DesignStateUtilities(game.objective(), game.topologies());
  ASSERT_TRUE(designs.has_value());
  for (std::size_t x = 0; x < 3; ++x) {
    EXPECT_TRUE(VerifyPotentialDef((*designs)[x].LiftedGame(game.space().cardinalities()),
                                   game.objective().Block(x)));
  }
}

TEST(StateDesign, ReportsFirstFailingStateAndPlayer) {
  // State 1 is fine on the complete graph, state 2 carries 1{a_1 = a_3} on a path.
  const RationalVector line_phi = {1, 0, 1, 0, 0, 1, 0, 1};
  RationalVector values(8, 0);
  values.insert(values.end(), line_phi.begin(), line_phi.end());
  const ObjectiveFunction phi = ObjectiveFunction::StateBased(values, {2, 2, 2}, 2);
  const std::vector<NetworkTopology> per_state = {NetworkTopology::Complete(3),
                                                  NetworkTopology(3, {{0, 1}, {1, 2}})};
  const auto failure = FirstUndesignableStatePlayer(phi, per_state);
  ASSERT_TRUE(failure.has_value());
  EXPECT_EQ(*failure, std::make_pair(std::size_t{1}, std::size_t{0}));
  EXPECT_FALSE(DesignStateUtilities(phi, per_state).has_value());
}

TEST(ClosedFormUtilities, AllDeviationEquationsHold) {
  const StateBasedGame game = Consensus();
  const ProfileSpace& space = game.space();
  int equations = 0;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t a = 0; a < 16; ++a)
      for (std::size_t i = 0; i < 4; ++i) {
        const std::size_t dev = space.WithStrategy(a, i, 1 - space.StrategyAt(a, i));
        EXPECT_EQ(game.Utility(x, i, dev) - game.Utility(x, i, a),
                  game.objective().At(x, dev) - game.objective().At(x, a));
        ++equations;
      }
  EXPECT_EQ(equations, 192);
  EXPECT_TRUE(VerifyStateBasedPotential(game));
}

TEST(ClosedFormUtilities, AreNeighbourhoodDetermined) {
  const StateBasedGame game = Consensus();
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t i = 0; i < 4; ++i)
      EXPECT_TRUE(DependsOnlyOn(game.utilities()[x][i], game.topologies()[x].neighborhood(i),
                                game.space()));
}

TEST(Verify, UniformStateProcessBreaksMonotonicity) {
  const StateBasedGame game = Consensus();
  const StateBasedGame uniform(game.objective(), game.topologies(), game.utilities(),
                               StochasticMatrix(kThird * RationalMatrix::Ones(3, 48)),
                               game.epsilon());
  EXPECT_TRUE(VerifyStateDifferences(uniform));
  EXPECT_FALSE(VerifyStateMonotone(uniform));
  EXPECT_FALSE(VerifyStateBasedPotential(uniform));
}

TEST(StateBasedGame, ConstructorValidation) {
  const StateBasedGame game = Consensus();
  for (const Rational& bad : {Rational(0), Rational(1), Rational(-1, 2)}) {
    EXPECT_THROW(StateBasedGame(game.objective(), game.topologies(), game.utilities(),
                                game.state_transition(), bad),
                 std::invalid_argument);
  }
  auto short_utilities = game.utilities();
  short_utilities.pop_back();
  EXPECT_THROW(StateBasedGame(game.objective(), game.topologies(), short_utilities,
                              game.state_transition(), game.epsilon()),
               std::invalid_argument);
  EXPECT_EQ(game.state_labels(), (std::vector<std::string>{"x1", "x2", "x3"}));
}

TEST(Reachability, FrozenActionClosure) {
  const StateBasedGame game = Consensus();
  EXPECT_EQ(ReachableStates(game, 0, 0), (std::set<std::size_t>{0, 1, 2}));
  EXPECT_EQ(ReachableStates(game, 0, 1), (std::set<std::size_t>{1, 2}));
  // a = (1,1,2,1): x_3 links 1 with 2 and is strictly best, so it is absorbing.
  const std::size_t a = game.space().Index(std::vector<std::size_t>{0, 0, 1, 0});
  EXPECT_EQ(ReachableStates(game, a, 2), (std::set<std::size_t>{2}));
}

TEST(Rse, UniqueConsensusEquilibrium) {
  const auto rse = RecurrentStateEquilibria(Consensus());
  ASSERT_EQ(rse.size(), 1u);
  EXPECT_EQ(rse[0].action, (StrategyProfile{0, 0, 0, 0}));
  EXPECT_EQ(rse[0].states, (std::set<std::size_t>{1, 2}));
}

TEST(Rse, AllTwosIsNotAnEquilibrium) {
  // Every agent agrees at (2,2,2,2), but in x_1 agent 1 has a single
  // neighbour and gains by switching to 1.
  const StateBasedGame game = Consensus();
  const std::size_t twos = game.space().Index(std::vector<std::size_t>{1, 1, 1, 1});
  for (const auto& e : RecurrentStateEquilibria(game)) {
    EXPECT_NE(game.space().Index(e.action), twos);
  }
}

TEST(Rse, SingleStateReducesToNash) {
  oracle::Generator gen(61);
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<std::size_t> k = {2, 2, 2};
    const auto c = gen.Payoffs(k, -2, 2);
    const ObjectiveFunction phi = ObjectiveFunction::StateBased(RationalVector(8), k, 1);
    const StateBasedGame game(phi, {NetworkTopology::Complete(3)},
                              {oracle::ToRationalPayoffs(c)}, BuildMP(phi, Sep::kSep2),
                              Rational(1, 2));
    std::set<StrategyProfile> rse;
    for (const auto& e : RecurrentStateEquilibria(game)) {
      EXPECT_EQ(e.states, (std::set<std::size_t>{0}));
      rse.insert(e.action);
    }
    std::set<StrategyProfile> nash;
    for (std::size_t a = 0; a < 8; ++a) {
      if (oracle::BruteForceNash(k, c, a)) nash.insert(oracle::Decode(a, k));
    }
    EXPECT_EQ(rse, nash);
  }
}

TEST(JointChain, ComposesStateThenAction) {
  const StateBasedGame game = Consensus();
  const JointChain chain = BuildJointChain(game);
  const StochasticMatrix mf = BuildMF(game);
  ASSERT_EQ(chain.transition.rows(), 48u);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t a = 0; a < 16; ++a)
      for (std::size_t y = 0; y < 3; ++y)
        for (std::size_t b = 0; b < 16; ++b)
          EXPECT_EQ(chain.transition(chain.PairIndex(y, b), chain.PairIndex(x, a)),
                    game.state_transition()(y, x * 16 + a) * mf(b, y * 16 + a));
}

TEST(JointChain, AbsorbedIntoEquilibriumFromEveryPair) {
  const JointChain chain = BuildJointChain(Consensus());
  const AbsorptionAnalysis analysis = AnalyzeAbsorption(chain.transition);
  ASSERT_EQ(analysis.closed_classes.size(), 1u);
  EXPECT_EQ(analysis.closed_classes[0],
            (std::vector<std::size_t>{chain.PairIndex(1, 0), chain.PairIndex(2, 0)}));
  for (std::size_t s = 0; s < 48; ++s) {
    EXPECT_EQ(analysis.absorption[s][0], 1);
    EXPECT_GE(analysis.hitting_time[s], 0);
  }
  // From (x_1, a*) the first step leaves x_1 with probability 2/3 and the
  // action stays put everywhere, so the hitting time is geometric: 3/2.
  EXPECT_EQ(analysis.hitting_time[chain.PairIndex(0, 0)], Rational(3, 2));
}

TEST(Simulation, RunsExactlyMaxStepsAndIsDeterministic) {
  const StateBasedGame game = Consensus();
  const std::size_t a0[] = {0, 1, 1, 1};
  const SimulationTrace t1 = SimulateStateBased(game, 1, a0, 50, 7);
  const SimulationTrace t2 = SimulateStateBased(game, 1, a0, 50, 7);
  EXPECT_EQ(t1.steps, t2.steps);
  EXPECT_EQ(t1.steps.size(), 51u);
  ASSERT_TRUE(t1.steps.front().state.has_value());
  EXPECT_EQ(*t1.steps.front().state, 1u);
  for (const TraceStep& s : t1.steps) {
    EXPECT_EQ(*s.objective, game.objective().At(*s.state, game.space().Index(s.profile)));
  }
  EXPECT_THROW(SimulateStateBased(game, 1, a0, 0, 7), std::invalid_argument);
  EXPECT_THROW(SimulateStateBased(game, 3, a0, 5, 7), std::out_of_range);
}

TEST(Simulation, PublishedInitialConditionsReachConsensus) {
  const StateBasedGame game = Consensus();
  for (const InitialCondition& init : reference::ConsensusInitialConditions()) {
    const SimulationTrace trace = SimulateStateBased(game, *init.state, init.profile, 100, 3);
    ASSERT_TRUE(trace.converged_at.has_value());
    EXPECT_EQ(trace.steps.back().profile, (StrategyProfile{0, 0, 0, 0}));
    EXPECT_NE(*trace.steps.back().state, 0u);
  }
}

}  // namespace
}  // namespace potgame
