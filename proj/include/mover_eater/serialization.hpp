// Copyright 2026 The Mover-Eater Authors
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

#pragma once

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mover_eater/engine.hpp"
#include "mover_eater/geometry.hpp"
#include "mover_eater/oracle.hpp"

namespace mover_eater {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string(MoveDirection dir) {
  switch (dir) {
    case MoveDirection::kUp:
      return "up";
    case MoveDirection::kDown:
      return "down";
    case MoveDirection::kLeft:
      return "left";
    case MoveDirection::kRight:
      return "right";
  }
  throw std::invalid_argument("invalid move direction");
}

inline MoveDirection direction_from_string(const std::string& name) {
  if (name == "up") return MoveDirection::kUp;
  if (name == "down") return MoveDirection::kDown;
  if (name == "left") return MoveDirection::kLeft;
  if (name == "right") return MoveDirection::kRight;
  throw ParseError("unknown move direction: " + name);
}

inline std::string to_string(EaterAction action) {
  switch (action) {
    case EaterAction::kEatGoal1:
      return "eat_g1";
    case EaterAction::kEatGoal2:
      return "eat_g2";
    case EaterAction::kEatHalf:
      return "eat_half";
  }
  throw std::invalid_argument("invalid eater action");
}

inline EaterAction eater_action_from_string(const std::string& name) {
  if (name == "eat_g1") return EaterAction::kEatGoal1;
  if (name == "eat_g2") return EaterAction::kEatGoal2;
  if (name == "eat_half") return EaterAction::kEatHalf;
  throw ParseError("unknown eater action: " + name);
}

inline std::string to_string(MoveClass move_class) {
  if (move_class.is_ambiguous) return "ambiguous";
  return move_class.toward == 1 ? "explicit_1" : "explicit_2";
}

inline MoveClass move_class_from_string(const std::string& name) {
  if (name == "ambiguous") return MoveClass::Ambiguous();
  if (name == "explicit_1") return MoveClass::Explicit(1);
  if (name == "explicit_2") return MoveClass::Explicit(2);
  throw ParseError("unknown move class: " + name);
}

inline std::string to_string(Region region) {
  switch (region) {
    case Region::kR1:
      return "R1";
    case Region::kR2:
      return "R2";
    case Region::kR3:
      return "R3";
  }
  throw std::invalid_argument("invalid region");
}

// Exact decimal rendering of a half-unit amount in bananas: "3", "-3.5".
inline std::string format_bananas(HalfUnits amount) {
  const int magnitude = std::abs(amount.value);
  std::string text = amount.value < 0 ? "-" : "";
  text += std::to_string(magnitude / 2);
  if (magnitude % 2 != 0) text += ".5";
  return text;
}

namespace detail {

inline int get_int(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer())
    throw ParseError(std::string("missing or non-integer field: ") + key);
  return it->get<int>();
}

inline std::string get_string(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_string())
    throw ParseError(std::string("missing or non-string field: ") + key);
  return it->get<std::string>();
}

inline GridPosition position_from_json(const nlohmann::json& j,
                                       const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_array() || it->size() != 2 ||
      !(*it)[0].is_number_integer() || !(*it)[1].is_number_integer())
    throw ParseError(std::string("field is not an [x, y] pair: ") + key);
  return GridPosition{(*it)[0].get<int>(), (*it)[1].get<int>()};
}

}  // namespace detail

inline nlohmann::json transcript_header_json(const Transcript& tr) {
  const GameState& s = tr.initial;
  return nlohmann::json{
      {"type", "header"},
      {"goals",
       {{s.goals.g1().x, s.goals.g1().y}, {s.goals.g2().x, s.goals.g2().y}}},
      {"start", {s.position.x, s.position.y}},
      {"b0_half", {s.consumption.b1.value, s.consumption.b2.value}},
      {"true_goal", s.true_goal},
  };
}

inline nlohmann::json transcript_step_json(int t, const TranscriptStep& step) {
  return nlohmann::json{
      {"t", t},
      {"mover_action", to_string(step.mover_action)},
      {"move_class", to_string(step.move_class)},
      {"eater_action", to_string(step.eater_action)},
      {"b1_half", step.consumption_after.b1.value},
      {"b2_half", step.consumption_after.b2.value},
      {"x", step.position_after.x},
      {"y", step.position_after.y},
  };
}

// One JSON object per line: a header describing the initial condition, then
// one line per timestep with the position and consumption after the step.
inline void write_transcript(std::ostream& out, const Transcript& tr) {
  out << transcript_header_json(tr).dump() << '\n';
  for (std::size_t t = 0; t < tr.steps.size(); ++t)
    out << transcript_step_json(static_cast<int>(t), tr.steps[t]).dump()
        << '\n';
}

inline std::string transcript_to_jsonl(const Transcript& tr) {
  std::ostringstream out;
  write_transcript(out, tr);
  return out.str();
}

// Parses a transcript and replays it against the game dynamics, so the
// result is guaranteed internally consistent, not just well-formed.
inline Transcript transcript_from_jsonl(std::istream& in) {
  std::string line;
  nlohmann::json header;
  std::vector<TranscriptStep> steps;
  int expected_t = 0;
  bool have_header = false;

  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& err) {
      throw ParseError(std::string("bad JSON line: ") + err.what());
    }
    if (!have_header) {
      if (detail::get_string(j, "type") != "header")
        throw ParseError("first line must be the transcript header");
      header = std::move(j);
      have_header = true;
      continue;
    }
    if (detail::get_int(j, "t") != expected_t)
      throw ParseError("step lines must have consecutive t starting at 0");
    ++expected_t;
    const GridPosition after{detail::get_int(j, "x"), detail::get_int(j, "y")};
    const ConsumptionVector consumption{
        HalfUnits(detail::get_int(j, "b1_half")),
        HalfUnits(detail::get_int(j, "b2_half"))};
    steps.push_back(TranscriptStep{
        direction_from_string(detail::get_string(j, "mover_action")),
        move_class_from_string(detail::get_string(j, "move_class")),
        eater_action_from_string(detail::get_string(j, "eater_action")),
        consumption, after});
  }
  if (!have_header) throw ParseError("transcript has no header line");

  const auto goals_json = header.find("goals");
  if (goals_json == header.end() || !goals_json->is_array() ||
      goals_json->size() != 2)
    throw ParseError("header goals must list two positions");
  nlohmann::json goals_holder{{"g1", (*goals_json)[0]},
                              {"g2", (*goals_json)[1]}};
  const GoalPair goals(detail::position_from_json(goals_holder, "g1"),
                       detail::position_from_json(goals_holder, "g2"));
  const GridPosition start = detail::position_from_json(header, "start");
  const auto b0_json = header.find("b0_half");
  if (b0_json == header.end() || !b0_json->is_array() || b0_json->size() != 2 ||
      !(*b0_json)[0].is_number_integer() || !(*b0_json)[1].is_number_integer())
    throw ParseError("header b0_half must be two integers");
  const ConsumptionVector b0{HalfUnits((*b0_json)[0].get<int>()),
                             HalfUnits((*b0_json)[1].get<int>())};
  const int true_goal = detail::get_int(header, "true_goal");

  Transcript tr{GameState(start, b0, goals, true_goal), std::move(steps),
                expected_t};
  try {
    replay(tr);
  } catch (const std::logic_error& err) {
    throw ParseError(std::string("transcript fails replay: ") + err.what());
  }
  return tr;
}

inline Transcript transcript_from_jsonl(const std::string& text) {
  std::istringstream in(text);
  return transcript_from_jsonl(in);
}

inline nlohmann::json transcript_json(const Transcript& tr) {
  nlohmann::json steps = nlohmann::json::array();
  for (std::size_t t = 0; t < tr.steps.size(); ++t)
    steps.push_back(transcript_step_json(static_cast<int>(t), tr.steps[t]));
  return nlohmann::json{{"header", transcript_header_json(tr)},
                        {"steps", std::move(steps)}};
}

inline nlohmann::json deviation_report_json(const DeviationReport& report) {
  nlohmann::json j{
      {"deviator", report.deviator == Deviator::kMover ? "mover" : "eater"},
      {"checked_count", report.checked_count},
      {"completed", report.completed},
      {"equilibrium_half", report.equilibrium_payoff.value},
      {"best_deviation_half", report.best_deviation_payoff.value},
      {"improving", report.improving()},
      {"bounds",
       {{"slack", report.bounds.slack},
        {"budget", report.bounds.budget},
        {"horizon_cap", report.bounds.horizon_cap}}},
  };
  j["witness"] =
      report.witness ? transcript_json(*report.witness) : nlohmann::json();
  return j;
}

inline nlohmann::json certificate_json(const EquilibriumCertificate& cert) {
  return nlohmann::json{
      {"v1_half", cert.v1.value},
      {"v2_half", cert.v2.value},
      {"ve_half", cert.ve.value},
      {"sim_game1_half", cert.sim_game1.value},
      {"sim_game2_half", cert.sim_game2.value},
      {"sim_eater_half", cert.sim_eater.value},
      {"closed_form_applicable", cert.closed_form_applicable},
      {"payoffs_match_closed_form", cert.payoffs_match_closed_form},
      {"mover_game1", deviation_report_json(cert.mover_game1)},
      {"mover_game2", deviation_report_json(cert.mover_game2)},
      {"eater", deviation_report_json(cert.eater)},
      {"inconclusive", cert.inconclusive},
      {"pass", cert.pass},
  };
}

}  // namespace mover_eater
