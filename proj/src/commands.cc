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

#include "potgame/commands.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "potgame/markov.h"
#include "potgame/potential.h"
#include "potgame/random.h"
#include "potgame/scenarios.h"

namespace potgame {

namespace {

std::string YesNo(bool v) { return v ? "yes" : "no"; }
std::string TrueFalse(bool v) { return v ? "true" : "false"; }

std::string ProfileString(std::span<const std::size_t> profile) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < profile.size(); ++i) os << (i ? "," : "") << profile[i] + 1;
  os << ')';
  return os.str();
}

std::string StateSetString(const std::set<std::size_t>& states,
                           const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x : states) {
    out += (first ? "" : ",") + labels[x];
    first = false;
  }
  return out + "}";
}

std::string Signed(const Rational& v) { return (sgn(v) >= 0 ? "+" : "") + ToString(v); }

std::vector<std::vector<RationalVector>> FullUtilitiesOrThrow(const SystemDefinition& def) {
  auto u = ResolveUtilities(def);
  if (!u) throw MissingPrerequisite("definition has neither utilities nor an fng");
  return *u;
}

void RequireObjective(const SystemDefinition& def) {
  if (!def.objective) throw MissingPrerequisite("definition has no objective");
}

int Verdict(bool ok, const CommandOptions& options) {
  return ok || !options.strict ? kExitOk : kExitNegative;
}

std::uint64_t ResolveSeed(const SystemDefinition& def, const CommandOptions& options) {
  if (options.seed) return *options.seed;
  if (def.seed) return *def.seed;
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

struct RunResult {
  std::uint64_t seed = 0;
  std::optional<std::size_t> converged_at;
  std::size_t length = 0;
  std::string csv;
};

}  // namespace

SystemDefinition ApplyOverrides(SystemDefinition def, const CommandOptions& options) {
  if (options.sep) def.sep = *options.sep;
  if (options.epsilon) def.epsilon = *options.epsilon;
  if (options.cadence) def.sur.cadence = *options.cadence;
  if (options.seed) def.seed = *options.seed;
  ValidateDefinition(def);
  return def;
}

int CmdVerify(const SystemDefinition& def, const CommandOptions& options, std::ostream& out) {
  out << "mode: " << ModeName(def.mode) << "\n";
  out << "players: " << def.players << "\n";
  if (def.mode == Mode::kFixed) {
    const FiniteGame game = ResolveGame(def);
    out << "profiles: " << game.profile_count() << "\n";
    const auto cert = IsPotential(game);
    out << "potential: " << YesNo(cert.has_value()) << "\n";
    bool ok = cert.has_value();
    if (cert) {
      const RationalVector normalized = NormalizePotential(cert->potential);
      out << "P: " << ToString(cert->potential) << "\n";
      out << "normalized: " << ToString(normalized) << " (shifted by "
          << Signed(-cert->potential.front()) << ")\n";
    }
    if (auto objective = ResolveObjective(def)) {
      const bool matches = VerifyPotentialDef(game, objective->values());
      out << "objective_is_potential: " << YesNo(matches) << "\n";
      ok = ok && matches;
    }
    return Verdict(ok, options);
  }
  const StateBasedGame game = ResolveStateGame(def);
  out << "states: " << game.states() << "\n";
  out << "sep: " << SepName(def.sep) << "\n";
  out << "epsilon: " << ToString(game.epsilon()) << "\n";
  for (std::size_t x = 0; x < game.states(); ++x) {
    out << "potential[" << game.state_labels()[x]
        << "]: " << YesNo(IsPotential(game.GameAt(x)).has_value()) << "\n";
  }
  const bool differences = VerifyStateDifferences(game);
  const bool monotone = VerifyStateMonotone(game);
  out << "state_differences: " << YesNo(differences) << "\n";
  out << "state_monotone: " << YesNo(monotone) << "\n";
  out << "state_based_potential: " << YesNo(differences && monotone) << "\n";
  return Verdict(differences && monotone, options);
}

int CmdDesign(const SystemDefinition& def, const CommandOptions& options,
              std::ostream& report, std::ostream& designed) {
  RequireObjective(def);
  const ObjectiveFunction objective = *ResolveObjective(def);
  const std::vector<NetworkTopology> topologies = ResolveTopologies(def);
  const auto& k = def.cardinalities;
  report << "mode: " << ModeName(def.mode) << "\n";
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
  for (std::size_t x = 0; x < def.state_count(); ++x) {
    const RationalVector block = objective.Block(x);
    const std::string prefix =
        def.mode == Mode::kFixed ? std::string() : def.states[x].label + " ";
    for (std::size_t i = 0; i < def.players; ++i) {
      const bool ok =
          InRowSpace(block, DesignabilityBlock(topologies[x].neighborhood(i), i, k));
      report << prefix << "player " << i + 1 << ": " << (ok ? "designable" : "not designable")
             << "\n";
      if (!ok && !first_failure) first_failure = std::make_pair(x, i);
    }
  }
  report << "designable: " << TrueFalse(!first_failure) << "\n";
  if (first_failure) {
    report << "first_violation: ";
    if (def.mode == Mode::kStateBased) report << "state " << def.states[first_failure->first].label << ", ";
    report << "player " << first_failure->second + 1 << "\n";
    return Verdict(false, options);
  }
  std::vector<std::vector<RationalVector>> local;
  for (std::size_t x = 0; x < def.state_count(); ++x) {
    auto design = DesignUtilities(objective.Block(x), topologies[x], k);
    if (!design) throw std::logic_error("design failed after a positive membership test");
    local.push_back(design->local);
  }
  std::size_t vectors = 0;
  for (const auto& per_player : local) vectors += per_player.size();
  report << "local_utility_vectors: " << vectors << "\n";
  SystemDefinition result = def;
  result.utilities = std::move(local);
  ValidateDefinition(result);
  designed << SerializeDefinition(result);
  return kExitOk;
}

int CmdSimulate(const SystemDefinition& def, const CommandOptions& options, std::ostream& out,
                std::ostream* csv) {
  if (options.steps == 0) throw SchemaError("--steps must be at least 1");
  if (options.runs == 0) throw SchemaError("--runs must be at least 1");
  const std::uint64_t seed = ResolveSeed(def, options);
  const std::size_t n = def.players;

  std::optional<StateBasedGame> state_game;
  std::optional<MbraDynamics> mbra;
  std::optional<ObjectiveFunction> objective = ResolveObjective(def);
  if (def.mode == Mode::kStateBased) {
    state_game.emplace(ResolveStateGame(def));
  } else {
    FiniteGame game(def.cardinalities, FullUtilitiesOrThrow(def).front());
    std::optional<NetworkTopology> topology = ResolveTopologies(def).front();
    mbra.emplace(std::move(game), SurConfig{def.sur.information, def.sur.cadence, seed},
                 std::move(topology));
  }

  std::optional<StrategyProfile> fixed_profile = options.profile;
  if (!fixed_profile && def.initial) fixed_profile = def.initial->profile;
  std::optional<std::size_t> fixed_state = options.state;
  if (!fixed_state && def.initial) fixed_state = def.initial->state;
  if (fixed_profile) {
    if (fixed_profile->size() != n) throw SchemaError("initial profile has the wrong length");
    for (std::size_t i = 0; i < n; ++i) {
      if ((*fixed_profile)[i] >= def.cardinalities[i]) {
        throw SchemaError("initial profile strategy out of range");
      }
    }
  }
  if (fixed_state && *fixed_state >= def.state_count()) {
    throw SchemaError("initial state out of range");
  }
  if (options.out) std::filesystem::create_directories(*options.out);

  auto run_one = [&](std::size_t run) {
    RunResult result;
    result.seed = options.runs == 1 ? seed : ReplicaSeed(seed, run);
    // Missing initial conditions are drawn from the run's own stream.
    RandomStream init_rng(result.seed, n + 1, 0);
    StrategyProfile profile(n);
    for (std::size_t i = 0; i < n; ++i) {
      profile[i] = fixed_profile ? (*fixed_profile)[i] : init_rng.Below(def.cardinalities[i]);
    }
    SimulationTrace trace;
    if (state_game) {
      const std::size_t x0 = fixed_state ? *fixed_state : init_rng.Below(state_game->states());
      trace = SimulateStateBased(*state_game, x0, profile, options.steps, result.seed);
    } else {
      MbraDynamics replica(mbra->game(),
                           SurConfig{def.sur.information, def.sur.cadence, result.seed},
                           ResolveTopologies(def).front());
      trace = replica.Simulate(profile, options.steps, objective ? &*objective : nullptr);
    }
    result.converged_at = trace.converged_at;
    result.length = trace.steps.size();
    std::ostringstream text;
    WriteTraceCsv(text, trace, n);
    result.csv = text.str();
    if (options.out) {
      std::ostringstream name;
      name << "run_" << std::setw(4) << std::setfill('0') << run + 1 << ".csv";
      std::ofstream file(std::filesystem::path(*options.out) / name.str());
      file << result.csv;
      result.csv.clear();
    }
    return result;
  };

  std::vector<RunResult> results(options.runs);
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, options.runs));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t run = next++; run < options.runs; run = next++) {
        try {
          results[run] = run_one(run);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  out << "seed: " << seed << "\n";
  out << "runs: " << options.runs << "\n";
  out << "steps: " << options.steps << "\n";
  std::size_t converged = 0;
  for (std::size_t run = 0; run < options.runs; ++run) {
    const RunResult& r = results[run];
    out << "run " << run + 1 << ": seed=" << r.seed << " converged_at=";
    if (r.converged_at) {
      out << *r.converged_at;
      ++converged;
    } else {
      out << "none";
    }
    out << "\n";
  }
  out << "converged: " << converged << "/" << options.runs << " within " << options.steps
      << " steps\n";
  out << "fraction_converged: " << ToString(Rational(converged) / Rational(options.runs))
      << "\n";
  if (!options.out && csv && options.runs == 1) *csv << results.front().csv;
  return kExitOk;
}

int CmdChain(const SystemDefinition& def, const CommandOptions& options, std::ostream& out) {
  (void)options;
  if (def.mode == Mode::kFixed) {
    const FiniteGame game = ResolveGame(def);
    MbraDynamics dynamics(game, SurConfig{def.sur.information, def.sur.cadence, 0},
                          ResolveTopologies(def).front());
    out << "mode: fixed\n";
    out << "fallback: fixed points of the update rule\n";
    std::vector<std::string> fixed;
    for (std::size_t a = 0; a < game.profile_count(); ++a) {
      if (dynamics.IsFixedPoint(a)) fixed.push_back(ProfileString(game.space().Profile(a)));
    }
    out << "fixed_point_count: " << fixed.size() << "\n";
    for (const std::string& f : fixed) out << "fixed_point: " << f << "\n";
    if (def.sur.cadence == Cadence::kRoundRobin) {
      out << "closed_classes: n/a (roundrobin cadence has no single transition matrix)\n";
      return kExitOk;
    }
    const AbsorptionAnalysis analysis = AnalyzeAbsorption(dynamics.TransitionMatrix());
    out << "closed_class_count: " << analysis.closed_classes.size() << "\n";
    for (std::size_t c = 0; c < analysis.closed_classes.size(); ++c) {
      out << "class " << c + 1 << ":";
      for (std::size_t a : analysis.closed_classes[c]) {
        out << " " << ProfileString(game.space().Profile(a));
      }
      out << "\n";
    }
    return kExitOk;
  }

  const StateBasedGame game = ResolveStateGame(def);
  const auto& labels = game.state_labels();
  const std::size_t k = game.profile_count();
  auto pair_string = [&](std::size_t index) {
    return "(" + labels[index / k] + "," + ProfileString(game.space().Profile(index % k)) + ")";
  };
  out << "mode: state_based\n";
  const auto equilibria = RecurrentStateEquilibria(game);
  out << "rse_count: " << equilibria.size() << "\n";
  std::set<std::size_t> invariant;
  for (std::size_t e = 0; e < equilibria.size(); ++e) {
    out << "rse " << e + 1 << ": action=" << ProfileString(equilibria[e].action)
        << " states=" << StateSetString(equilibria[e].states, labels) << "\n";
    const std::size_t a = game.space().Index(equilibria[e].action);
    for (std::size_t x : equilibria[e].states) invariant.insert(x * k + a);
  }
  const JointChain chain = BuildJointChain(game);
  const AbsorptionAnalysis analysis = AnalyzeAbsorption(chain.transition);
  out << "closed_class_count: " << analysis.closed_classes.size() << "\n";
  std::vector<bool> class_in_rse(analysis.closed_classes.size());
  for (std::size_t c = 0; c < analysis.closed_classes.size(); ++c) {
    out << "class " << c + 1 << ":";
    bool inside = true;
    for (std::size_t s : analysis.closed_classes[c]) {
      out << " " << pair_string(s);
      inside = inside && invariant.contains(s);
    }
    class_in_rse[c] = inside;
    out << "\n";
  }
  std::size_t certain = 0;
  for (std::size_t s = 0; s < chain.transition.rows(); ++s) {
    Rational into_rse = 0;
    for (std::size_t c = 0; c < analysis.closed_classes.size(); ++c) {
      if (class_in_rse[c]) into_rse += analysis.absorption[s][c];
    }
    if (into_rse == 1) ++certain;
    out << "pair " << pair_string(s) << ": absorption=" << ToString(analysis.absorption[s])
        << " hitting_time=" << ToString(analysis.hitting_time[s]) << "\n";
  }
  out << "absorbed_into_rse_with_probability_1: " << certain << "/" << chain.transition.rows()
      << "\n";
  return kExitOk;
}

std::vector<std::string> ReproIds() { return {"3.1", "3.3.1", "4.3.1"}; }

std::vector<ReproCheck> RunRepro(std::string_view id) {
  // Scenario names are accepted as aliases for the numeric ids.
  if (id == "three_player") id = "3.1";
  if (id == "cycle_network") id = "3.3.1";
  if (id == "switched_consensus") id = "4.3.1";
  std::vector<ReproCheck> checks;
  auto check = [&](std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  };
  if (id == "3.1") {
    const SystemDefinition def = ThreePlayerDefinition();
    const FiniteGame game = ResolveGame(def);
    const PotentialEquation eq = BuildPotentialEquation(game);
    const RationalVector xi = reference::ThreePlayerXi();
    check("published xi solves the potential equation", eq.coefficients * xi == eq.rhs);
    const RationalVector from_xi = CertificateFromSolution(game, xi).potential;
    check("potential from published xi", from_xi == reference::ThreePlayerPotential(),
          ToString(from_xi));
    const auto cert = IsPotential(game);
    check("game is potential", cert.has_value());
    const RationalVector phi = reference::ThreePlayerObjective();
    if (cert) {
      check("solver potential equals objective up to a constant",
            NormalizePotential(cert->potential) == NormalizePotential(phi),
            ToString(cert->potential));
    }
    RationalVector shifted = phi;
    for (Rational& v : shifted) v -= 1;
    check("published potential equals objective minus 1",
          shifted == reference::ThreePlayerPotential());
    check("objective satisfies the potential definition", VerifyPotentialDef(game, phi));
    return checks;
  }
  if (id == "3.3.1") {
    const FiniteGame pd = ResolveGame(PrisonersDilemmaDefinition());
    const auto pd_cert = IsPotential(pd);
    check("prisoner's dilemma is potential", pd_cert.has_value());
    if (pd_cert) {
      check("prisoner's dilemma potential",
            NormalizePotential(pd_cert->potential) ==
                NormalizePotential(reference::PrisonersDilemmaPotential()),
            ToString(pd_cert->potential));
    }
    check("matching pennies is not potential",
          !IsPotential(ResolveGame(MatchingPenniesDefinition())).has_value());
    const SystemDefinition def = CycleNetworkDefinition();
    const ObjectiveFunction phi = *ResolveObjective(def);
    const NetworkTopology topology = ResolveTopologies(def).front();
    check("objective equals the published vector",
          phi.values() == reference::CycleNetworkObjective(), ToString(phi.values()));
    for (std::size_t i = 0; i < def.players; ++i) {
      check("player " + std::to_string(i + 1) + " designable",
            InRowSpace(phi.values(), DesignabilityBlock(topology.neighborhood(i), i,
                                                        def.cardinalities)));
    }
    const auto design = DesignUtilities(phi, topology);
    check("designed utilities exist", design.has_value());
    if (design) {
      check("designed utilities have the objective as potential",
            VerifyPotentialDef(design->LiftedGame(def.cardinalities), phi.values()));
    }
    check("natural network utilities have the objective as potential",
          VerifyPotentialDef(ResolveGame(def), phi.values()));
    return checks;
  }
  if (id == "4.3.1") {
    const SystemDefinition def = SwitchedConsensusDefinition();
    const StateBasedGame game = ResolveStateGame(def);
    const auto blocks = reference::ConsensusObjectiveBlocks();
    for (std::size_t x = 0; x < 3; ++x) {
      check("objective block x" + std::to_string(x + 1),
            game.objective().Block(x) == blocks[x], ToString(game.objective().Block(x)));
    }
    const auto mp_blocks = reference::ConsensusTransitionBlocks();
    const std::size_t k = game.profile_count();
    for (std::size_t x = 0; x < 3; ++x) {
      bool equal = true;
      for (std::size_t y = 0; y < 3; ++y) {
        for (std::size_t a = 0; a < k; ++a) {
          equal = equal && game.state_transition()(y, x * k + a) == mp_blocks[x](y, a);
        }
      }
      check("SEP-2 transition block x" + std::to_string(x + 1), equal);
    }
    check("designable in every state",
          CheckStateDesignability(game.objective(), game.topologies()));
    check("closed-form utilities match objective differences", VerifyStateDifferences(game));
    check("state process never lowers the objective", VerifyStateMonotone(game));
    const StochasticMatrix mf = BuildMF(game);
    bool excerpt = true;
    for (const auto& e : reference::ConsensusActionExcerpt()) {
      excerpt = excerpt && mf(e.row - 1, e.col - 1) == e.value;
    }
    check("action matrix excerpt at epsilon 1/10", excerpt);
    const auto rse = RecurrentStateEquilibria(game);
    const bool unique = rse.size() == 1 && rse[0].action == StrategyProfile{0, 0, 0, 0} &&
                        rse[0].states == std::set<std::size_t>{1, 2};
    check("unique recurrent state equilibrium (1,1,1,1) on {x2,x3}", unique);
    const JointChain chain = BuildJointChain(game);
    const AbsorptionAnalysis analysis = AnalyzeAbsorption(chain.transition);
    const std::vector<std::size_t> target = {chain.PairIndex(1, 0), chain.PairIndex(2, 0)};
    bool absorbed = analysis.closed_classes.size() == 1 && analysis.closed_classes[0] == target;
    for (std::size_t s = 0; absorbed && s < chain.transition.rows(); ++s) {
      absorbed = analysis.absorption[s][0] == 1;
    }
    check("absorbed into the equilibrium from all 48 pairs", absorbed);
    return checks;
  }
  throw std::invalid_argument("unknown example id '" + std::string(id) +
                              "' (expected 3.1, 3.3.1, 4.3.1 or the scenario names three_player, cycle_network, switched_consensus)");
}

int CmdRepro(std::string_view id, std::ostream& out) {
  const std::vector<ReproCheck> checks = RunRepro(id);
  bool all = true;
  for (const ReproCheck& c : checks) {
    out << (c.passed ? "PASS" : "FAIL") << ": " << c.name;
    if (!c.passed && !c.detail.empty()) out << " (got " << c.detail << ")";
    out << "\n";
    all = all && c.passed;
  }
  out << "result: " << (all ? "pass" : "fail") << "\n";
  return all ? kExitOk : kExitNegative;
}

}  // namespace potgame
