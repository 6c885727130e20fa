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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mover_eater/engine.hpp"
#include "mover_eater/geometry.hpp"
#include "mover_eater/oracle.hpp"
#include "mover_eater/serialization.hpp"
#include "mover_eater/strategies.hpp"
#include "mover_eater/value.hpp"

namespace mover_eater {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Inclusive rectangle of sweep cells.
struct WindowRect {
  GridPosition min;
  GridPosition max;

  long long cell_count() const {
    return static_cast<long long>(max.x - min.x + 1) *
           static_cast<long long>(max.y - min.y + 1);
  }
};

// One configuration document drives every subcommand; each command reads the
// fields it needs and validates them up front.
struct ScenarioConfig {
  GoalPair goals;
  std::optional<GridPosition> start;
  ConsumptionVector b0;  // stored in half-units; the file gives whole bananas
  std::optional<int> true_goal;
  std::string mover = "equilibrium";
  std::string eater = "equilibrium";
  std::optional<WindowRect> window;
  int horizon_cap = 0;  // 0: derive per game
  int slack = 2;
  std::int64_t budget = 10'000'000;
  int exaggeration_k = 1;

  explicit ScenarioConfig(GoalPair goal_pair) : goals(goal_pair) {}
};

namespace detail {

inline GridPosition config_position(const nlohmann::json& j, const char* key) {
  try {
    return position_from_json(j, key);
  } catch (const ParseError& err) {
    throw ConfigError(err.what());
  }
}

}  // namespace detail

inline ScenarioConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  const auto goals_it = doc.find("goals");
  if (goals_it == doc.end() || !goals_it->is_array() || goals_it->size() != 2)
    throw ConfigError("config needs goals: two [x, y] pairs");
  const nlohmann::json goals_holder{{"g1", (*goals_it)[0]},
                                    {"g2", (*goals_it)[1]}};
  const GridPosition g1 = detail::config_position(goals_holder, "g1");
  const GridPosition g2 = detail::config_position(goals_holder, "g2");
  if (g1 == g2) throw ConfigError("goals must be distinct");

  ScenarioConfig config(GoalPair(g1, g2));
  if (doc.contains("start"))
    config.start = detail::config_position(doc, "start");
  if (doc.contains("b0")) {
    const auto& b0 = doc.at("b0");
    if (!b0.is_array() || b0.size() != 2 || !b0[0].is_number_integer() ||
        !b0[1].is_number_integer() || b0[0].get<int>() < 0 ||
        b0[1].get<int>() < 0)
      throw ConfigError("b0 must be two nonnegative whole-banana integers");
    config.b0 = ConsumptionVector{HalfUnits::from_bananas(b0[0].get<int>()),
                                  HalfUnits::from_bananas(b0[1].get<int>())};
  }
  if (doc.contains("true_goal")) {
    if (!doc.at("true_goal").is_number_integer())
      throw ConfigError("true_goal must be 1 or 2");
    config.true_goal = doc.at("true_goal").get<int>();
    if (*config.true_goal != 1 && *config.true_goal != 2)
      throw ConfigError("true_goal must be 1 or 2");
  }
  if (doc.contains("mover")) {
    if (!doc.at("mover").is_string())
      throw ConfigError("mover must be a strategy name string");
    config.mover = doc.at("mover").get<std::string>();
  }
  if (doc.contains("eater")) {
    if (!doc.at("eater").is_string())
      throw ConfigError("eater must be a strategy name string");
    config.eater = doc.at("eater").get<std::string>();
  }
  if (doc.contains("window")) {
    const auto& w = doc.at("window");
    if (!w.is_array() || w.size() != 2)
      throw ConfigError("window must be [[min_x, min_y], [max_x, max_y]]");
    const nlohmann::json holder{{"min", w[0]}, {"max", w[1]}};
    WindowRect window{detail::config_position(holder, "min"),
                      detail::config_position(holder, "max")};
    if (window.min.x > window.max.x || window.min.y > window.max.y)
      throw ConfigError("window is empty");
    config.window = window;
  }
  if (doc.contains("horizon_cap")) {
    if (!doc.at("horizon_cap").is_number_integer() ||
        doc.at("horizon_cap").get<int>() < 1)
      throw ConfigError("horizon_cap must be a positive integer");
    config.horizon_cap = doc.at("horizon_cap").get<int>();
  }
  if (doc.contains("slack")) {
    if (!doc.at("slack").is_number_integer() || doc.at("slack").get<int>() < 0)
      throw ConfigError("slack must be a nonnegative integer");
    config.slack = doc.at("slack").get<int>();
  }
  if (doc.contains("budget")) {
    if (!doc.at("budget").is_number_integer() ||
        doc.at("budget").get<std::int64_t>() < 1)
      throw ConfigError("budget must be a positive integer");
    config.budget = doc.at("budget").get<std::int64_t>();
  }
  if (doc.contains("exaggeration_k")) {
    if (!doc.at("exaggeration_k").is_number_integer() ||
        doc.at("exaggeration_k").get<int>() < 0)
      throw ConfigError("exaggeration_k must be a nonnegative integer");
    config.exaggeration_k = doc.at("exaggeration_k").get<int>();
  }
  return config;
}

inline ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& err) {
    throw ConfigError(std::string("config is not valid JSON: ") + err.what());
  }
  return parse_config(doc);
}

// Strategy-name binding. Mover names may need the scenario geometry because
// the scripted variants are built as concrete paths from the start cell.
inline std::unique_ptr<EaterStrategy> make_eater(const std::string& name) {
  if (name == "equilibrium") return std::make_unique<EquilibriumEater>();
  if (name == "half_half") return std::make_unique<HalfHalfEater>();
  throw ConfigError("unknown eater strategy: " + name);
}

namespace detail {

inline std::vector<MoveDirection> parse_path_list(const std::string& body) {
  std::vector<MoveDirection> path;
  std::string token;
  std::istringstream in(body);
  while (std::getline(in, token, ',')) {
    std::string name;
    for (char c : token)
      if (!std::isspace(static_cast<unsigned char>(c)))
        name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name.empty()) throw ConfigError("empty entry in path strategy");
    try {
      path.push_back(direction_from_string(name));
    } catch (const ParseError& err) {
      throw ConfigError(err.what());
    }
  }
  return path;
}

}  // namespace detail

inline std::unique_ptr<MoverStrategy> make_mover(const std::string& name,
                                                 const GoalPair& goals,
                                                 GridPosition start,
                                                 int true_goal) {
  if (name == "equilibrium") return std::make_unique<EquilibriumMover>();
  if (name == "explicit_first")
    return std::make_unique<ScriptedMover>(
        build_explicit_first_path(start, goals, true_goal));
  constexpr const char* kExaggeration = "exaggeration:";
  if (name.rfind(kExaggeration, 0) == 0) {
    const std::string arg = name.substr(std::string(kExaggeration).size());
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw ConfigError("exaggeration needs an integer k, got: " + name);
    }
    if (k < 0) throw ConfigError("exaggeration k must be nonnegative");
    try {
      return std::make_unique<ScriptedMover>(
          build_exaggeration_path(start, goals, true_goal, k));
    } catch (const std::invalid_argument& err) {
      throw ConfigError(std::string("exaggeration path unavailable: ") +
                        err.what());
    }
  }
  if (name.rfind("path:[", 0) == 0 && name.back() == ']') {
    const std::string body = name.substr(6, name.size() - 7);
    return std::make_unique<ScriptedMover>(detail::parse_path_list(body));
  }
  throw ConfigError("unknown mover strategy: " + name);
}

// Options carried by command-line flags, overriding the config document.
struct CliOptions {
  bool simulate = false;
  bool decimal = false;
  std::optional<int> slack;
  std::optional<std::int64_t> budget;
};

namespace detail {

inline EnumerationBounds effective_bounds(const ScenarioConfig& config,
                                          const CliOptions& options) {
  EnumerationBounds bounds;
  bounds.slack = options.slack.value_or(config.slack);
  bounds.budget = options.budget.value_or(config.budget);
  bounds.horizon_cap = config.horizon_cap;
  return bounds;
}

inline std::string render_half(HalfUnits amount, bool decimal) {
  return decimal ? format_bananas(amount) : std::to_string(amount.value);
}

inline GridPosition require_start(const ScenarioConfig& config) {
  if (!config.start) throw ConfigError("this command needs a start cell");
  return *config.start;
}

inline int require_true_goal(const ScenarioConfig& config) {
  if (!config.true_goal) throw ConfigError("this command needs true_goal");
  return *config.true_goal;
}

inline WindowRect require_window(const ScenarioConfig& config,
                                 std::int64_t budget) {
  if (!config.window) throw ConfigError("this command needs a window");
  if (config.window->cell_count() > budget)
    throw ConfigError("window too large for budget: " +
                      std::to_string(config.window->cell_count()) +
                      " cells over " + std::to_string(budget));
  return *config.window;
}

template <typename PerCell>
inline void for_each_cell(const WindowRect& window, PerCell&& per_cell) {
  for (int y = window.min.y; y <= window.max.y; ++y)
    for (int x = window.min.x; x <= window.max.x; ++x)
      per_cell(GridPosition{x, y});
}

}  // namespace detail

// Plays one game and prints the terminal time, the per-goal consumption in
// decimal bananas, and the move-class sequence. The transcript goes to
// `transcript_out` when provided.
inline int cmd_play(const ScenarioConfig& config, const CliOptions& options,
                    std::ostream& out, std::ostream* transcript_out) {
  const GridPosition start = detail::require_start(config);
  const int true_goal = detail::require_true_goal(config);
  const auto mover = make_mover(config.mover, config.goals, start, true_goal);
  const auto eater = make_eater(config.eater);

  const GameState initial(start, config.b0, config.goals, true_goal);
  const int cap = config.horizon_cap > 0 ? config.horizon_cap
                                         : default_horizon_cap(initial);
  const Transcript tr = play(initial, *mover, *eater, cap);

  out << "T=" << tr.terminal_time << '\n';
  const ConsumptionVector final_consumption =
      tr.steps.empty() ? tr.initial.consumption
                       : tr.steps.back().consumption_after;
  out << "consumption=(" << format_bananas(final_consumption.b1) << ", "
      << format_bananas(final_consumption.b2) << ")\n";
  out << "move_classes=";
  for (std::size_t i = 0; i < tr.steps.size(); ++i)
    out << (i == 0 ? "" : " ") << to_string(tr.steps[i].move_class);
  out << '\n';
  if (transcript_out) write_transcript(*transcript_out, tr);
  return 0;
}

struct ValueMapResult {
  std::string csv;
  std::vector<GridPosition> boundary;  // cells where the two values tie
  std::vector<std::string> mismatches;
};

// Closed-form value map over the window, one row per cell, sorted by (y, x).
// With `simulate`, each cell is also played out under the equilibrium pair
// in both games and compared exactly.
inline ValueMapResult value_map(const ScenarioConfig& config,
                                const CliOptions& options) {
  const WindowRect window = detail::require_window(
      config, options.budget.value_or(config.budget));
  ValueMapResult result;
  std::ostringstream csv;
  csv << (options.decimal ? "x,y,v1,v2,ve,region,n_a,n_r1,n_r2"
                          : "x,y,v1_half,v2_half,ve_half,region,n_a,n_r1,n_r2")
      << '\n';

  const EquilibriumMover mover;
  const EquilibriumEater eater;
  detail::for_each_cell(window, [&](GridPosition cell) {
    const HalfUnits v1 = equilibrium_value(cell, config.b0, config.goals, 1);
    const HalfUnits v2 = equilibrium_value(cell, config.b0, config.goals, 2);
    const HalfUnits ve = std::min(v1, v2);
    const Region region = region_of(cell, config.goals);
    const StepCounts counts = step_counts(cell, config.goals);
    csv << cell.x << ',' << cell.y << ','
        << detail::render_half(v1, options.decimal) << ','
        << detail::render_half(v2, options.decimal) << ','
        << detail::render_half(ve, options.decimal) << ','
        << to_string(region) << ',' << counts.n_ambiguous << ','
        << counts.n_explicit_1 << ',' << counts.n_explicit_2 << '\n';
    if (v1 == v2) result.boundary.push_back(cell);

    if (options.simulate) {
      for (int goal_index : {1, 2}) {
        const GameState initial(cell, config.b0, config.goals, goal_index);
        const HalfUnits expected = goal_index == 1 ? v1 : v2;
        const HalfUnits simulated =
            is_terminal(initial)
                ? initial.consumption.at(goal_index)
                : outcome(play(initial, mover, eater,
                               config.horizon_cap > 0
                                   ? config.horizon_cap
                                   : default_horizon_cap(initial)),
                          goal_index);
        if (simulated != expected) {
          std::ostringstream msg;
          msg << "cell (" << cell.x << ", " << cell.y << ") game "
              << goal_index << ": closed form " << expected.value
              << " vs simulated " << simulated.value << " half-units";
          result.mismatches.push_back(msg.str());
        }
      }
    }
  });
  result.csv = csv.str();
  return result;
}

inline int cmd_value_map(const ScenarioConfig& config,
                         const CliOptions& options, std::ostream& csv_out,
                         std::ostream& info_out) {
  const ValueMapResult result = value_map(config, options);
  csv_out << result.csv;
  for (GridPosition cell : result.boundary)
    info_out << "boundary v1=v2 at (" << cell.x << ", " << cell.y << ")\n";
  if (options.simulate) {
    for (const std::string& mismatch : result.mismatches)
      info_out << "MISMATCH " << mismatch << '\n';
    info_out << "simulate: " << result.mismatches.size() << " mismatches\n";
  }
  return result.mismatches.empty() ? 0 : 1;
}

// Per-cell region and minimum step counts, same window and ordering rules as
// the value map.
inline std::string classify_map_csv(const ScenarioConfig& config,
                                    const CliOptions& options) {
  const WindowRect window = detail::require_window(
      config, options.budget.value_or(config.budget));
  std::ostringstream csv;
  csv << "x,y,region,n_a,n_r1,n_r2\n";
  detail::for_each_cell(window, [&](GridPosition cell) {
    const StepCounts counts = step_counts(cell, config.goals);
    csv << cell.x << ',' << cell.y << ','
        << to_string(region_of(cell, config.goals)) << ','
        << counts.n_ambiguous << ',' << counts.n_explicit_1 << ','
        << counts.n_explicit_2 << '\n';
  });
  return csv.str();
}

inline int cmd_classify_map(const ScenarioConfig& config,
                            const CliOptions& options, std::ostream& csv_out) {
  csv_out << classify_map_csv(config, options);
  return 0;
}

struct ComparedPath {
  std::string name;
  std::optional<std::string> error;     // set when the path cannot be built
  std::vector<HalfUnits> cumulative;    // consumption at the true goal per step
  HalfUnits total;
};

struct ComparePathsResult {
  std::vector<ComparedPath> paths;
  std::string csv;
};

// Plays the three Mover constructions against the equilibrium Eater and
// tabulates cumulative consumption at the true goal after each step.
inline ComparePathsResult compare_paths(const ScenarioConfig& config,
                                        const CliOptions& options) {
  const GridPosition start = detail::require_start(config);
  const int true_goal = detail::require_true_goal(config);
  const EquilibriumEater eater;

  ComparePathsResult result;
  const std::string exaggeration_name =
      "exaggeration:" + std::to_string(config.exaggeration_k);
  for (const std::string& name :
       {std::string("equilibrium"), std::string("explicit_first"),
        exaggeration_name}) {
    ComparedPath entry;
    entry.name = name;
    try {
      const auto mover = make_mover(name, config.goals, start, true_goal);
      const GameState initial(start, config.b0, config.goals, true_goal);
      const int cap = config.horizon_cap > 0 ? config.horizon_cap
                                             : default_horizon_cap(initial);
      const Transcript tr = play(initial, *mover, eater, cap);
      for (const TranscriptStep& step : tr.steps)
        entry.cumulative.push_back(step.consumption_after.at(true_goal));
      entry.total = outcome(tr, true_goal);
    } catch (const ConfigError& err) {
      entry.error = err.what();
    } catch (const HorizonExceeded& err) {
      entry.error = err.what();
    }
    result.paths.push_back(std::move(entry));
  }

  std::size_t rows = 0;
  for (const ComparedPath& entry : result.paths)
    rows = std::max(rows, entry.cumulative.size());
  std::ostringstream csv;
  csv << "t";
  for (const ComparedPath& entry : result.paths) {
    std::string column = entry.name;
    const std::size_t colon = column.find(':');
    if (colon != std::string::npos) column = column.substr(0, colon);
    csv << ',' << column << (options.decimal ? "" : "_half");
  }
  csv << '\n';
  for (std::size_t t = 0; t < rows; ++t) {
    csv << t;
    for (const ComparedPath& entry : result.paths) {
      csv << ',';
      if (!entry.error && t < entry.cumulative.size())
        csv << detail::render_half(entry.cumulative[t], options.decimal);
    }
    csv << '\n';
  }
  result.csv = csv.str();
  return result;
}

inline int cmd_compare_paths(const ScenarioConfig& config,
                             const CliOptions& options, std::ostream& csv_out,
                             std::ostream& summary_out) {
  const ComparePathsResult result = compare_paths(config, options);
  csv_out << result.csv;
  for (const ComparedPath& entry : result.paths) {
    if (entry.error)
      summary_out << entry.name << ": unavailable (" << *entry.error << ")\n";
    else
      summary_out << entry.name << " total=" << format_bananas(entry.total)
                  << '\n';
  }
  return 0;
}

// Equilibrium audit over a window (or the single start cell): closed form
// versus simulation versus exhaustive deviation search, reported as JSON.
inline int cmd_verify(const ScenarioConfig& config, const CliOptions& options,
                      std::ostream& report_out, std::ostream& summary_out) {
  if (config.mover.rfind("path:", 0) == 0)
    throw ConfigError("verify sweeps need a start-independent mover strategy");
  const auto eater = make_eater(config.eater);
  const bool closed_form_applicable =
      config.mover == "equilibrium" && config.eater == "equilibrium";
  const EnumerationBounds bounds = detail::effective_bounds(config, options);

  std::vector<GridPosition> cells;
  if (config.window) {
    detail::require_window(config, bounds.budget);
    detail::for_each_cell(*config.window,
                          [&](GridPosition cell) { cells.push_back(cell); });
  } else {
    cells.push_back(detail::require_start(config));
  }

  nlohmann::json report{{"cells", nlohmann::json::array()}};
  bool all_pass = true;
  for (GridPosition cell : cells) {
    nlohmann::json entry{{"x", cell.x}, {"y", cell.y}};
    try {
      const auto mover_game1 = make_mover(config.mover, config.goals, cell, 1);
      const auto mover_game2 = make_mover(config.mover, config.goals, cell, 2);
      const Scenario scenario{cell, config.b0, config.goals};
      const EquilibriumCertificate cert =
          verify_equilibrium(scenario, *mover_game1, *mover_game2, *eater,
                             closed_form_applicable, bounds);
      entry["certificate"] = certificate_json(cert);
      all_pass = all_pass && cert.pass;
      summary_out << "(" << cell.x << ", " << cell.y << "): "
                  << (cert.pass ? "pass"
                                : cert.inconclusive ? "inconclusive" : "FAIL")
                  << '\n';
    } catch (const ConfigError& err) {
      entry["error"] = err.what();
      all_pass = false;
      summary_out << "(" << cell.x << ", " << cell.y << "): error "
                  << err.what() << '\n';
    }
    report["cells"].push_back(std::move(entry));
  }
  report["all_pass"] = all_pass;
  report_out << report.dump(2) << '\n';
  summary_out << (all_pass ? "all cells pass\n" : "deviation found\n");
  return all_pass ? 0 : 1;
}

}  // namespace mover_eater
