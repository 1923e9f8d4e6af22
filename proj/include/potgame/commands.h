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

// The potgame subcommands, written against streams so they can be driven
// from tests. Reports are plain "key: value" lines.

#ifndef POTGAME_COMMANDS_H_
#define POTGAME_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "potgame/definition.h"

namespace potgame {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitSchema = 2,
  kExitMissing = 3,
};

struct CommandOptions {
  bool strict = false;
  std::optional<Sep> sep;
  std::optional<Rational> epsilon;
  std::optional<Cadence> cadence;
  std::size_t steps = 100;
  std::size_t runs = 1;
  std::optional<std::uint64_t> seed;
  // simulate: directory for per-run CSVs; design: output definition file.
  std::optional<std::string> out;
  // simulate: overrides the definition's initial condition (0-based).
  std::optional<StrategyProfile> profile;
  std::optional<std::size_t> state;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Applies --sep/--epsilon/--cadence and revalidates.
SystemDefinition ApplyOverrides(SystemDefinition definition, const CommandOptions& options);

int CmdVerify(const SystemDefinition& definition, const CommandOptions& options,
              std::ostream& out);
// Writes the report to `report` and, when designable, the completed
// definition (utilities filled with local vectors) to `designed`.
int CmdDesign(const SystemDefinition& definition, const CommandOptions& options,
              std::ostream& report, std::ostream& designed);
// With options.out set, writes run_NNNN.csv files there. Otherwise a single
// run's CSV goes to `csv` (ignored when null).
int CmdSimulate(const SystemDefinition& definition, const CommandOptions& options,
                std::ostream& out, std::ostream* csv);
int CmdChain(const SystemDefinition& definition, const CommandOptions& options,
             std::ostream& out);

struct ReproCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};
// id ∈ {3.1, 3.3.1, 4.3.1}, or the matching scenario name (three_player,
// cycle_network, switched_consensus); throws std::invalid_argument otherwise.
std::vector<ReproCheck> RunRepro(std::string_view id);
std::vector<std::string> ReproIds();
int CmdRepro(std::string_view id, std::ostream& out);

}  // namespace potgame

#endif  // POTGAME_COMMANDS_H_
