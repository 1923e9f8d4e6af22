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

#include "potgame/definition.h"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "potgame/potential.h"

namespace potgame {

using nlohmann::json;

namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& message) {
  throw SchemaError("field '" + path + "': " + message);
}

void RequireKeys(const json& node, const std::string& path,
                 std::initializer_list<std::string_view> allowed) {
  if (!node.is_object()) Fail(path, "expected an object");
  for (const auto& [key, value] : node.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || key == a;
    if (!known) Fail(path.empty() ? key : path + "." + key, "unknown field");
  }
}

std::string Child(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string Item(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& Required(const json& node, const std::string& path, std::string_view key) {
  auto it = node.find(key);
  if (it == node.end()) Fail(Child(path, key), "missing");
  return *it;
}

std::uint64_t ReadUnsigned(const json& node, const std::string& path) {
  if (!node.is_number_unsigned()) Fail(path, "expected a non-negative integer");
  return node.get<std::uint64_t>();
}

// 1-based on disk.
std::size_t ReadIndex(const json& node, const std::string& path, std::size_t bound) {
  const std::uint64_t v = ReadUnsigned(node, path);
  if (v < 1 || v > bound) {
    Fail(path, "index " + std::to_string(v) + " outside 1.." + std::to_string(bound));
  }
  return static_cast<std::size_t>(v - 1);
}

std::string ReadString(const json& node, const std::string& path) {
  if (!node.is_string()) Fail(path, "expected a string");
  return node.get<std::string>();
}

Rational ReadRational(const json& node, const std::string& path) {
  if (node.is_number_integer()) {
    return node.is_number_unsigned() ? Rational(std::to_string(node.get<std::uint64_t>()))
                                     : Rational(std::to_string(node.get<std::int64_t>()));
  }
  if (node.is_string()) {
    try {
      return ParseRational(node.get<std::string>());
    } catch (const std::invalid_argument& e) {
      Fail(path, e.what());
    }
  }
  Fail(path, "expected an integer or a \"p/q\" string");
}

RationalVector ReadVector(const json& node, const std::string& path) {
  if (!node.is_array()) Fail(path, "expected an array");
  RationalVector out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(ReadRational(node[i], Item(path, i)));
  }
  return out;
}

std::vector<Edge> ReadEdges(const json& node, const std::string& path, std::size_t n) {
  if (!node.is_array()) Fail(path, "expected an array of [u, v] pairs");
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < node.size(); ++e) {
    const std::string p = Item(path, e);
    if (!node[e].is_array() || node[e].size() != 2) Fail(p, "expected a pair [u, v]");
    const std::size_t u = ReadIndex(node[e][0], Item(p, 0), n);
    const std::size_t v = ReadIndex(node[e][1], Item(p, 1), n);
    if (u == v) Fail(p, "self-loop");
    edges.emplace_back(u, v);
  }
  return edges;
}

json EdgesToJson(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back({u + 1, v + 1});
  return out;
}

json VectorToJson(std::span<const Rational> values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(RationalToJson(v));
  return out;
}

Fng ReadFng(const json& node, const std::string& path) {
  RequireKeys(node, path, {"strategies", "row", "col"});
  Fng fng;
  fng.row = ReadVector(Required(node, path, "row"), Child(path, "row"));
  fng.col = ReadVector(Required(node, path, "col"), Child(path, "col"));
  if (auto it = node.find("strategies"); it != node.end()) {
    const std::string p = Child(path, "strategies");
    if (!it->is_array() || it->size() != 2) Fail(p, "expected [m, n]");
    fng.row_strategies = ReadUnsigned((*it)[0], Item(p, 0));
    fng.col_strategies = ReadUnsigned((*it)[1], Item(p, 1));
  } else {
    std::size_t m = 1;
    while (m * m < fng.row.size()) ++m;
    fng.row_strategies = fng.col_strategies = m;
  }
  try {
    fng.Validate();
  } catch (const std::exception& e) {
    Fail(path, e.what());
  }
  return fng;
}

json FngToJson(const Fng& fng) {
  return {{"strategies", {fng.row_strategies, fng.col_strategies}},
          {"row", VectorToJson(fng.row)},
          {"col", VectorToJson(fng.col)}};
}

std::size_t Product(std::span<const std::size_t> values) {
  std::size_t p = 1;
  for (std::size_t v : values) p *= v;
  return p;
}

constexpr std::size_t kMaxProfiles = std::size_t{1} << 16;

}  // namespace

json RationalToJson(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) {
    return static_cast<std::int64_t>(value.get_num().get_si());
  }
  return ToString(value);
}

std::string ModeName(Mode mode) { return mode == Mode::kFixed ? "fixed" : "state_based"; }

std::string SepName(Sep sep) { return sep == Sep::kSep1 ? "sep1" : "sep2"; }

std::string CadenceName(Cadence cadence) {
  switch (cadence) {
    case Cadence::kSimultaneous: return "simultaneous";
    case Cadence::kRoundRobin: return "roundrobin";
    case Cadence::kRandom: return "random";
  }
  return "";
}

std::string InformationName(InformationMode information) {
  return information == InformationMode::kGlobal ? "global" : "local";
}

Sep ParseSep(std::string_view name) {
  if (name == "sep1") return Sep::kSep1;
  if (name == "sep2") return Sep::kSep2;
  throw SchemaError("unknown sep '" + std::string(name) + "' (expected sep1 or sep2)");
}

Cadence ParseCadence(std::string_view name) {
  if (name == "simultaneous") return Cadence::kSimultaneous;
  if (name == "roundrobin") return Cadence::kRoundRobin;
  if (name == "random") return Cadence::kRandom;
  throw SchemaError("unknown cadence '" + std::string(name) +
                    "' (expected simultaneous, roundrobin or random)");
}

InformationMode ParseInformation(std::string_view name) {
  if (name == "global") return InformationMode::kGlobal;
  if (name == "local") return InformationMode::kLocal;
  throw SchemaError("unknown information mode '" + std::string(name) +
                    "' (expected global or local)");
}

SystemDefinition ParseDefinition(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(e.what());
  }
  RequireKeys(root, "",
              {"players", "cardinalities", "mode", "edges", "states", "objective",
               "utilities", "fng", "sep", "epsilon", "sur", "seed", "initial"});
  SystemDefinition def;
  def.players = ReadUnsigned(Required(root, "", "players"), "players");
  if (def.players == 0) Fail("players", "need at least one player");
  const json& card = Required(root, "", "cardinalities");
  if (!card.is_array()) Fail("cardinalities", "expected an array");
  for (std::size_t i = 0; i < card.size(); ++i) {
    def.cardinalities.push_back(ReadUnsigned(card[i], Item("cardinalities", i)));
  }
  if (auto it = root.find("mode"); it != root.end()) {
    const std::string mode = ReadString(*it, "mode");
    if (mode == "fixed") {
      def.mode = Mode::kFixed;
    } else if (mode == "state_based") {
      def.mode = Mode::kStateBased;
    } else {
      Fail("mode", "expected fixed or state_based");
    }
  }
  const std::size_t n = def.players;
  if (auto it = root.find("edges"); it != root.end()) def.edges = ReadEdges(*it, "edges", n);
  if (auto it = root.find("states"); it != root.end()) {
    if (!it->is_array()) Fail("states", "expected an array");
    for (std::size_t x = 0; x < it->size(); ++x) {
      const std::string p = Item("states", x);
      RequireKeys((*it)[x], p, {"label", "edges"});
      StateSpec state;
      state.label = (*it)[x].contains("label") ? ReadString((*it)[x]["label"], Child(p, "label"))
                                               : "x" + std::to_string(x + 1);
      state.edges = ReadEdges(Required((*it)[x], p, "edges"), Child(p, "edges"), n);
      def.states.push_back(std::move(state));
    }
  }
  if (auto it = root.find("objective"); it != root.end()) {
    RequireKeys(*it, "objective", {"vector", "blocks", "builder", "fng"});
    ObjectiveSpec spec;
    if (it->contains("builder")) {
      const std::string builder = ReadString((*it)["builder"], "objective.builder");
      if (builder == "consensus") {
        spec.kind = ObjectiveSpec::Kind::kConsensus;
      } else if (builder == "edge_potential_sum") {
        spec.kind = ObjectiveSpec::Kind::kEdgePotentialSum;
        if (it->contains("fng")) spec.fng = ReadFng((*it)["fng"], "objective.fng");
      } else {
        Fail("objective.builder", "expected consensus or edge_potential_sum");
      }
      if (it->contains("vector") || it->contains("blocks")) {
        Fail("objective", "a builder objective takes no explicit values");
      }
    } else if (it->contains("vector")) {
      spec.values = ReadVector((*it)["vector"], "objective.vector");
    } else if (it->contains("blocks")) {
      const json& blocks = (*it)["blocks"];
      if (!blocks.is_array()) Fail("objective.blocks", "expected an array of vectors");
      for (std::size_t x = 0; x < blocks.size(); ++x) {
        RationalVector block = ReadVector(blocks[x], Item("objective.blocks", x));
        spec.values.insert(spec.values.end(), block.begin(), block.end());
      }
      spec.kind = ObjectiveSpec::Kind::kExplicit;
      if (def.mode == Mode::kFixed) Fail("objective.blocks", "fixed mode takes a 'vector'");
    } else {
      Fail("objective", "need one of vector, blocks or builder");
    }
    if (it->contains("vector") && def.mode == Mode::kStateBased) {
      Fail("objective.vector", "state based mode takes 'blocks'");
    }
    def.objective = std::move(spec);
  }
  if (auto it = root.find("utilities"); it != root.end()) {
    if (!it->is_array()) Fail("utilities", "expected an array");
    std::vector<std::vector<RationalVector>> blocks;
    auto read_players = [&](const json& node, const std::string& p) {
      if (!node.is_array()) Fail(p, "expected one vector per player");
      std::vector<RationalVector> per_player;
      for (std::size_t i = 0; i < node.size(); ++i) {
        per_player.push_back(ReadVector(node[i], Item(p, i)));
      }
      return per_player;
    };
    if (def.mode == Mode::kFixed) {
      blocks.push_back(read_players(*it, "utilities"));
    } else {
      for (std::size_t x = 0; x < it->size(); ++x) {
        blocks.push_back(read_players((*it)[x], Item("utilities", x)));
      }
    }
    def.utilities = std::move(blocks);
  }
  if (auto it = root.find("fng"); it != root.end()) def.fng = ReadFng(*it, "fng");
  if (auto it = root.find("sep"); it != root.end()) {
    try {
      def.sep = ParseSep(ReadString(*it, "sep"));
    } catch (const SchemaError& e) {
      Fail("sep", e.what());
    }
  }
  if (auto it = root.find("epsilon"); it != root.end()) {
    def.epsilon = ReadRational(*it, "epsilon");
  }
  if (auto it = root.find("sur"); it != root.end()) {
    RequireKeys(*it, "sur", {"cadence", "information"});
    try {
      if (it->contains("cadence")) {
        def.sur.cadence = ParseCadence(ReadString((*it)["cadence"], "sur.cadence"));
      }
      if (it->contains("information")) {
        def.sur.information =
            ParseInformation(ReadString((*it)["information"], "sur.information"));
      }
    } catch (const SchemaError& e) {
      Fail("sur", e.what());
    }
  }
  if (auto it = root.find("seed"); it != root.end()) def.seed = ReadUnsigned(*it, "seed");
  if (auto it = root.find("initial"); it != root.end()) {
    RequireKeys(*it, "initial", {"state", "profile"});
    InitialCondition init;
    const json& profile = Required(*it, "initial", "profile");
    if (!profile.is_array() || profile.size() != n) {
      Fail("initial.profile", "expected " + std::to_string(n) + " strategies");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t bound = i < def.cardinalities.size() ? def.cardinalities[i] : 0;
      init.profile.push_back(ReadIndex(profile[i], Item("initial.profile", i), bound));
    }
    if (it->contains("state")) {
      init.state = ReadIndex((*it)["state"], "initial.state",
                             std::max<std::size_t>(def.states.size(), 1));
    }
    def.initial = std::move(init);
  }
  ValidateDefinition(def);
  return def;
}

SystemDefinition LoadDefinition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseDefinition(text.str());
}

void ValidateDefinition(const SystemDefinition& def) {
  const std::size_t n = def.players;
  if (n == 0) Fail("players", "need at least one player");
  if (def.cardinalities.size() != n) {
    Fail("cardinalities", "expected " + std::to_string(n) + " entries, got " +
                              std::to_string(def.cardinalities.size()));
  }
  std::size_t k = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (def.cardinalities[i] < 2) Fail(Item("cardinalities", i), "need at least 2 strategies");
    if (k > kMaxProfiles / def.cardinalities[i]) {
      Fail("cardinalities", "profile space exceeds " + std::to_string(kMaxProfiles));
    }
    k *= def.cardinalities[i];
  }
  auto check_edges = [&](const std::vector<Edge>& edges, const std::string& path) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].first >= n || edges[e].second >= n || edges[e].first == edges[e].second) {
        Fail(Item(path, e), "invalid edge");
      }
    }
  };
  const std::size_t r = def.state_count();
  if (def.mode == Mode::kFixed) {
    if (!def.states.empty()) Fail("states", "only allowed in state_based mode");
    if (def.edges) check_edges(*def.edges, "edges");
  } else {
    if (def.states.empty()) Fail("states", "state_based mode needs at least one state");
    if (def.edges) Fail("edges", "state_based mode takes per-state edges");
    for (std::size_t x = 0; x < r; ++x) check_edges(def.states[x].edges, Item("states", x));
  }
  auto check_fng = [&](const Fng& fng, const std::string& path) {
    for (std::size_t i = 0; i < n; ++i) {
      if (def.cardinalities[i] != fng.row_strategies ||
          def.cardinalities[i] != fng.col_strategies) {
        Fail(path, "every player needs as many strategies as the bimatrix");
      }
    }
  };
  if (def.fng) check_fng(*def.fng, "fng");
  if (def.objective) {
    const ObjectiveSpec& spec = *def.objective;
    switch (spec.kind) {
      case ObjectiveSpec::Kind::kExplicit:
        if (spec.values.size() != r * k) {
          Fail("objective", "expected " + std::to_string(r) + " block(s) of length " +
                                std::to_string(k) + ", got " +
                                std::to_string(spec.values.size()) + " values");
        }
        break;
      case ObjectiveSpec::Kind::kConsensus:
        for (std::size_t i = 0; i < n; ++i) {
          if (def.cardinalities[i] != 2) Fail("objective", "consensus needs binary agents");
        }
        break;
      case ObjectiveSpec::Kind::kEdgePotentialSum:
        if (!spec.fng && !def.fng) Fail("objective", "edge_potential_sum needs an fng");
        check_fng(spec.fng ? *spec.fng : *def.fng, "objective.fng");
        break;
    }
  }
  if (def.utilities) {
    const auto& blocks = *def.utilities;
    if (blocks.size() != r) {
      Fail("utilities", "expected " + std::to_string(r) + " state block(s)");
    }
    const std::vector<NetworkTopology> topologies = ResolveTopologies(def);
    for (std::size_t x = 0; x < r; ++x) {
      const std::string px = def.mode == Mode::kFixed ? "utilities" : Item("utilities", x);
      if (blocks[x].size() != n) Fail(px, "expected one vector per player");
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t len = blocks[x][i].size();
        const std::size_t local =
            LocalProfileCount(topologies[x].neighborhood(i), def.cardinalities);
        if (len != k && len != local) {
          Fail(Item(px, i), "length " + std::to_string(len) + " is neither " +
                                std::to_string(k) + " (full) nor " + std::to_string(local) +
                                " (local)");
        }
      }
    }
  }
  if (def.epsilon && (sgn(*def.epsilon) <= 0 || *def.epsilon >= 1)) {
    Fail("epsilon", "must lie strictly between 0 and 1");
  }
  if (def.initial) {
    const InitialCondition& init = *def.initial;
    if (init.profile.size() != n) Fail("initial.profile", "wrong length");
    for (std::size_t i = 0; i < n; ++i) {
      if (init.profile[i] >= def.cardinalities[i]) {
        Fail(Item("initial.profile", i), "strategy out of range");
      }
    }
    if (init.state && (def.mode == Mode::kFixed || *init.state >= r)) {
      Fail("initial.state", "state out of range");
    }
  }
}

json DefinitionToJson(const SystemDefinition& def) {
  json root;
  root["players"] = def.players;
  root["cardinalities"] = def.cardinalities;
  root["mode"] = ModeName(def.mode);
  if (def.edges) root["edges"] = EdgesToJson(*def.edges);
  if (def.mode == Mode::kStateBased) {
    json states = json::array();
    for (const StateSpec& s : def.states) {
      states.push_back({{"label", s.label}, {"edges", EdgesToJson(s.edges)}});
    }
    root["states"] = states;
  }
  if (def.objective) {
    const ObjectiveSpec& spec = *def.objective;
    json obj;
    switch (spec.kind) {
      case ObjectiveSpec::Kind::kExplicit:
        if (def.mode == Mode::kFixed) {
          obj["vector"] = VectorToJson(spec.values);
        } else {
          const std::size_t k = Product(def.cardinalities);
          json blocks = json::array();
          for (std::size_t x = 0; x < def.state_count(); ++x) {
            blocks.push_back(VectorToJson(std::span(spec.values).subspan(x * k, k)));
          }
          obj["blocks"] = blocks;
        }
        break;
      case ObjectiveSpec::Kind::kConsensus:
        obj["builder"] = "consensus";
        break;
      case ObjectiveSpec::Kind::kEdgePotentialSum:
        obj["builder"] = "edge_potential_sum";
        if (spec.fng) obj["fng"] = FngToJson(*spec.fng);
        break;
    }
    root["objective"] = obj;
  }
  if (def.utilities) {
    auto players_json = [](const std::vector<RationalVector>& per_player) {
      json out = json::array();
      for (const RationalVector& u : per_player) out.push_back(VectorToJson(u));
      return out;
    };
    if (def.mode == Mode::kFixed) {
      root["utilities"] = players_json(def.utilities->front());
    } else {
      json blocks = json::array();
      for (const auto& per_player : *def.utilities) blocks.push_back(players_json(per_player));
      root["utilities"] = blocks;
    }
  }
  if (def.fng) root["fng"] = FngToJson(*def.fng);
  root["sep"] = SepName(def.sep);
  if (def.epsilon) root["epsilon"] = ToString(*def.epsilon);
  root["sur"] = {{"cadence", CadenceName(def.sur.cadence)},
                 {"information", InformationName(def.sur.information)}};
  if (def.seed) root["seed"] = *def.seed;
  if (def.initial) {
    json init;
    json profile = json::array();
    for (std::size_t s : def.initial->profile) profile.push_back(s + 1);
    init["profile"] = profile;
    if (def.initial->state) init["state"] = *def.initial->state + 1;
    root["initial"] = init;
  }
  return root;
}

std::string SerializeDefinition(const SystemDefinition& def) {
  return DefinitionToJson(def).dump(2) + "\n";
}

std::vector<NetworkTopology> ResolveTopologies(const SystemDefinition& def) {
  std::vector<NetworkTopology> out;
  if (def.mode == Mode::kFixed) {
    out.push_back(def.edges ? NetworkTopology(def.players, *def.edges)
                            : NetworkTopology::Complete(def.players));
  } else {
    for (const StateSpec& s : def.states) out.emplace_back(def.players, s.edges);
  }
  return out;
}

std::optional<ObjectiveFunction> ResolveObjective(const SystemDefinition& def) {
  if (!def.objective) return std::nullopt;
  const ObjectiveSpec& spec = *def.objective;
  const std::vector<NetworkTopology> topologies = ResolveTopologies(def);
  const bool fixed = def.mode == Mode::kFixed;
  RationalVector values;
  switch (spec.kind) {
    case ObjectiveSpec::Kind::kExplicit:
      values = spec.values;
      break;
    case ObjectiveSpec::Kind::kConsensus:
      values = ConsensusObjective(topologies, def.cardinalities).values();
      break;
    case ObjectiveSpec::Kind::kEdgePotentialSum: {
      const Fng& fng = spec.fng ? *spec.fng : *def.fng;
      for (const NetworkTopology& t : topologies) {
        const RationalVector block = EdgePotentialObjective(t, fng).values();
        values.insert(values.end(), block.begin(), block.end());
      }
      break;
    }
  }
  return fixed ? ObjectiveFunction::Fixed(std::move(values), def.cardinalities)
               : ObjectiveFunction::StateBased(std::move(values), def.cardinalities,
                                               def.state_count());
}

std::optional<std::vector<std::vector<RationalVector>>> ResolveUtilities(
    const SystemDefinition& def) {
  const std::vector<NetworkTopology> topologies = ResolveTopologies(def);
  const std::size_t k = Product(def.cardinalities);
  std::vector<std::vector<RationalVector>> out;
  if (def.utilities) {
    for (std::size_t x = 0; x < def.state_count(); ++x) {
      std::vector<RationalVector> per_player;
      for (std::size_t i = 0; i < def.players; ++i) {
        const RationalVector& u = (*def.utilities)[x][i];
        per_player.push_back(u.size() == k ? u
                                           : LiftLocalUtility(u, topologies[x].neighborhood(i),
                                                              def.cardinalities));
      }
      out.push_back(std::move(per_player));
    }
    return out;
  }
  if (def.fng) {
    for (const NetworkTopology& t : topologies) {
      out.push_back(NetworkGame(t, *def.fng).utilities());
    }
    return out;
  }
  return std::nullopt;
}

FiniteGame ResolveGame(const SystemDefinition& def) {
  if (def.mode != Mode::kFixed) throw SchemaError("expected a fixed mode definition");
  auto utilities = ResolveUtilities(def);
  if (!utilities) throw MissingPrerequisite("definition has neither utilities nor an fng");
  return FiniteGame(def.cardinalities, std::move(utilities->front()));
}

StateBasedGame ResolveStateGame(const SystemDefinition& def) {
  if (def.mode != Mode::kStateBased) throw SchemaError("expected a state_based definition");
  auto objective = ResolveObjective(def);
  if (!objective) throw MissingPrerequisite("definition has no objective");
  auto utilities = ResolveUtilities(def);
  if (!utilities) throw MissingPrerequisite("definition has neither utilities nor an fng");
  if (!def.epsilon) throw MissingPrerequisite("definition has no epsilon");
  StochasticMatrix mp = BuildMP(*objective, def.sep);
  std::vector<std::string> labels;
  for (const StateSpec& s : def.states) labels.push_back(s.label);
  return StateBasedGame(std::move(*objective), ResolveTopologies(def), std::move(*utilities),
                        std::move(mp), *def.epsilon, std::move(labels));
}

}  // namespace potgame
