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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "potgame/commands.h"
#include "potgame/scenarios.h"

namespace {

using potgame::CommandOptions;

potgame::StrategyProfile ParseProfile(const std::string& text) {
  potgame::StrategyProfile out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v == 0) {
      throw potgame::SchemaError("--profile expects 1-based strategies like 1,1,2");
    }
    out.push_back(v - 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Potential games on networks: verification, utility design, simulation"};
  app.require_subcommand(1);

  CommandOptions options;
  std::string file, id, sep, epsilon, cadence, profile, out;
  std::optional<std::size_t> state;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "System definition (JSON)")->required();
    sub->add_flag("--strict", options.strict, "Exit 1 on a negative verdict");
    sub->add_option("--sep", sep, "State process: sep1 or sep2");
    sub->add_option("--epsilon", epsilon, "Inertia as p/q, strictly inside (0, 1)");
    sub->add_option("--cadence", cadence, "simultaneous, roundrobin or random");
  };

  CLI::App* verify = app.add_subcommand("verify", "Check the potential conditions");
  add_common(verify);
  CLI::App* design = app.add_subcommand("design", "Design local utilities for the objective");
  add_common(design);
  design->add_option("--out", out, "Write the completed definition here (default: stdout)");
  CLI::App* simulate = app.add_subcommand("simulate", "Simulate the learning dynamics");
  add_common(simulate);
  simulate->add_option("--steps", options.steps, "Steps per run (>= 1)");
  simulate->add_option("--runs", options.runs, "Number of replicas");
  simulate->add_option("--seed", seed, "Base seed (printed when generated)");
  simulate->add_option("--out", out, "Directory for per-run CSV traces");
  simulate->add_option("--profile", profile, "Initial profile, 1-based, e.g. 1,1,1,2");
  simulate->add_option("--state", state, "Initial state, 1-based");
  simulate->add_option("--threads", options.threads, "Worker threads (0 = all cores)");
  CLI::App* chain = app.add_subcommand("chain", "Exact analysis of the joint Markov chain");
  add_common(chain);
  CLI::App* repro = app.add_subcommand("repro", "Re-run the checks of a worked example");
  repro->add_option("id", id, "3.1 (three_player), 3.3.1 (cycle_network) or 4.3.1 (switched_consensus)")->required();
  CLI::App* scenario = app.add_subcommand("scenario", "Print a built-in definition");
  scenario->add_option("name", id, "Scenario name")->required();
  scenario->add_option("--out", out, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : potgame::kExitSchema;
  }

  try {
    if (repro->parsed()) return potgame::CmdRepro(id, std::cout);
    if (scenario->parsed()) {
      const std::string text = potgame::SerializeDefinition(potgame::ScenarioByName(id));
      if (out.empty()) {
        std::cout << text;
      } else {
        std::ofstream(out) << text;
      }
      return potgame::kExitOk;
    }
    if (!sep.empty()) options.sep = potgame::ParseSep(sep);
    if (!epsilon.empty()) {
      try {
        options.epsilon = potgame::ParseRational(epsilon);
      } catch (const std::invalid_argument& e) {
        throw potgame::SchemaError(std::string("--epsilon: ") + e.what());
      }
    }
    if (!cadence.empty()) options.cadence = potgame::ParseCadence(cadence);
    if (!profile.empty()) options.profile = ParseProfile(profile);
    if (state) {
      if (*state == 0) throw potgame::SchemaError("--state is 1-based");
      options.state = *state - 1;
    }
    options.seed = seed;
    if (!out.empty()) options.out = out;

    const potgame::SystemDefinition definition =
        potgame::ApplyOverrides(potgame::LoadDefinition(file), options);
    if (verify->parsed()) return potgame::CmdVerify(definition, options, std::cout);
    if (chain->parsed()) return potgame::CmdChain(definition, options, std::cout);
    if (design->parsed()) {
      if (out.empty()) return potgame::CmdDesign(definition, options, std::cerr, std::cout);
      std::ostringstream designed;
      const int code = potgame::CmdDesign(definition, options, std::cout, designed);
      if (!designed.str().empty()) std::ofstream(out) << designed.str();
      return code;
    }
    if (simulate->parsed()) {
      // A lone run without --out streams its CSV; the summary then goes to stderr.
      const bool stream_csv = out.empty() && options.runs == 1;
      return potgame::CmdSimulate(definition, options, stream_csv ? std::cerr : std::cout,
                                  stream_csv ? &std::cout : nullptr);
    }
  } catch (const potgame::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return potgame::kExitSchema;
  } catch (const potgame::MissingPrerequisite& e) {
    std::cerr << "error: missing prerequisite: " << e.what() << "\n";
    return potgame::kExitMissing;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return potgame::kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return potgame::kExitOk;
}
