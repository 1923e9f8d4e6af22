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

#include "potgame/trace.h"

#include <sstream>
#include <stdexcept>
#include <string>

namespace potgame {

namespace {

std::vector<std::string> SplitCommas(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::size_t ParseIndex(const std::string& text, std::size_t line) {
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(text, &pos);
    if (pos != text.size() || v == 0) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("trace line " + std::to_string(line) +
                                ": bad index '" + text + "'");
  }
}

}  // namespace

void WriteTraceCsv(std::ostream& os, const SimulationTrace& trace,
                   std::size_t players) {
  os << "t,state";
  for (std::size_t i = 1; i <= players; ++i) os << ",a_" << i;
  os << ",phi\n";
  for (const TraceStep& step : trace.steps) {
    os << step.t << ',';
    if (step.state) os << *step.state + 1;
    for (std::size_t s : step.profile) os << ',' << s + 1;
    os << ',';
    if (step.objective) os << step.objective->get_str();
    os << '\n';
  }
}

std::vector<TraceStep> ReadTraceCsv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("trace: missing header");
  const auto header = SplitCommas(line);
  if (header.size() < 3 || header[0] != "t" || header[1] != "state" ||
      header.back() != "phi") {
    throw std::invalid_argument("trace: unexpected header '" + line + "'");
  }
  const std::size_t players = header.size() - 3;
  std::vector<TraceStep> steps;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = SplitCommas(line);
    if (fields.size() != players + 3) {
      throw std::invalid_argument("trace line " + std::to_string(line_no) +
                                  ": wrong field count");
    }
    TraceStep step;
    step.t = std::stoul(fields[0]);
    if (!fields[1].empty()) step.state = ParseIndex(fields[1], line_no) - 1;
    for (std::size_t i = 0; i < players; ++i) {
      step.profile.push_back(ParseIndex(fields[2 + i], line_no) - 1);
    }
    if (!fields.back().empty()) step.objective = ParseRational(fields.back());
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace potgame
