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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mover_eater/engine.hpp"
#include "mover_eater/geometry.hpp"
#include "mover_eater/strategies.hpp"
#include "mover_eater/value.hpp"

namespace mover_eater {

// Brute-force best-response search. Certifies, on bounded instances, that
// neither player can improve on a candidate strategy pair: the Mover by any
// goal-reaching path within a length slack, the Eater by any deterministic
// decision tree consistent with what it can observe.

class BoundsExceeded : public std::runtime_error {
 public:
  explicit BoundsExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// Shared initial condition of the two candidate games.
struct Scenario {
  GridPosition start;
  ConsumptionVector b0;
  GoalPair goals;

  GameState initial_state(int true_goal) const {
    return GameState(start, b0, goals, true_goal);
  }
};

struct EnumerationBounds {
  int slack = 2;                      // extra path length granted to the Mover
  std::int64_t budget = 10'000'000;   // search-node allowance
  int horizon_cap = 0;                // 0: derive from the scenario
};

enum class Deviator { kMover, kEater };

struct DeviationReport {
  Deviator deviator = Deviator::kMover;
  std::int64_t checked_count = 0;      // complete alternatives evaluated
  HalfUnits best_deviation_payoff;     // best value in the deviator's favor
  HalfUnits equilibrium_payoff;        // what the candidate strategy scores
  std::optional<Transcript> witness;   // present iff a strict improvement
  EnumerationBounds bounds;
  bool completed = true;               // false when the budget cut the search

  bool improving() const { return witness.has_value(); }
};

// Eats from one fixed goal no matter what it observes. Against a Mover whose
// moves cannot depend on consumption this is the most any strategy can take
// from that goal, since every action yields it at most a whole banana.
class SingleGoalEater : public EaterStrategy {
 public:
  explicit SingleGoalEater(int goal_index) : goal_index_(goal_index) {}
  EaterAction decide(const EaterView&) const override {
    return goal_index_ == 1 ? EaterAction::kEatGoal1 : EaterAction::kEatGoal2;
  }

 private:
  int goal_index_;
};

namespace detail {

struct BudgetCounter {
  std::int64_t used = 0;
  std::int64_t limit = 0;

  void charge(std::int64_t amount = 1) {
    used += amount;
    if (used > limit)
      throw BoundsExceeded("enumeration exceeded its node budget");
  }
};

// Maximum consumption at `goal_index` achievable in a single game from
// `state`, over every deterministic eater behavior. Returns the value and
// the steps that realize it.
struct SoloResult {
  HalfUnits value;
  std::vector<TranscriptStep> steps;
};

inline SoloResult solo_max_consumption(const GameState& state,
                                       const MoverStrategy& mover,
                                       int goal_index, int horizon_cap,
                                       BudgetCounter& budget) {
  if (is_terminal(state))
    return SoloResult{state.consumption.at(goal_index), {}};

  if (mover.consumption_independent()) {
    budget.charge();
    Transcript tr =
        play(state, mover, SingleGoalEater(goal_index), horizon_cap);
    return SoloResult{outcome(tr, goal_index), std::move(tr.steps)};
  }

  // The Mover may react to consumption, so every reply matters: branch on
  // all of them.
  SoloResult best{HalfUnits(-1), {}};
  std::vector<TranscriptStep> steps;
  auto recurse = [&](auto&& self, const GameState& s) -> void {
    budget.charge();
    if (s.clock - state.clock >= horizon_cap) throw HorizonExceeded(horizon_cap);
    const MoveDirection action = mover.decide(
        MoverView{s.position, s.consumption, s.clock, s.true_goal, s.goals});
    const GridPosition new_position = step(s.position, action);
    const MoveClass move_class = classify_move(s.position, action, s.goals);
    for (EaterAction reply :
         {EaterAction::kEatGoal1, EaterAction::kEatGoal2,
          EaterAction::kEatHalf}) {
      const ConsumptionVector after =
          apply_eater_action(s.consumption, reply);
      steps.push_back(
          TranscriptStep{action, move_class, reply, after, new_position});
      if (new_position == s.goals.goal(s.true_goal)) {
        if (after.at(goal_index) > best.value)
          best = SoloResult{after.at(goal_index), steps};
      } else {
        self(self, GameState(new_position, after, s.goals, s.true_goal,
                             s.clock + 1));
      }
      steps.pop_back();
    }
  };
  recurse(recurse, state);
  return best;
}

}  // namespace detail

// Exhausts the Eater's deterministic decision trees against a fixed pair of
// Mover strategies and reports the best achievable worst case across the two
// games. While the two games are observationally identical (same positions,
// same observed move, same consumption), a single choice feeds both; the
// moment they diverge (different observed moves, or one game ending) each
// game is completed on its own branch.
inline DeviationReport eater_best_response(const Scenario& scenario,
                                           const MoverStrategy& mover_game1,
                                           const MoverStrategy& mover_game2,
                                           const EaterStrategy& baseline,
                                           EnumerationBounds bounds = {}) {
  const GameState init1 = scenario.initial_state(1);
  const GameState init2 = scenario.initial_state(2);
  const int cap = bounds.horizon_cap > 0
                      ? bounds.horizon_cap
                      : std::max(default_horizon_cap(init1),
                                 default_horizon_cap(init2));

  DeviationReport report;
  report.deviator = Deviator::kEater;
  report.bounds = bounds;
  report.equilibrium_payoff =
      std::min(is_terminal(init1)
                   ? init1.consumption.b1
                   : outcome(play(init1, mover_game1, baseline, cap), 1),
               is_terminal(init2)
                   ? init2.consumption.b2
                   : outcome(play(init2, mover_game2, baseline, cap), 2));

  detail::BudgetCounter budget{0, bounds.budget};
  HalfUnits best(-1);
  std::optional<Transcript> best_binding_game;

  std::vector<TranscriptStep> shared_steps;
  auto consider = [&](HalfUnits payoff1, std::vector<TranscriptStep> steps1,
                      HalfUnits payoff2, std::vector<TranscriptStep> steps2) {
    ++report.checked_count;
    const HalfUnits payoff = std::min(payoff1, payoff2);
    if (payoff > best) {
      best = payoff;
      if (payoff1 <= payoff2) {
        const int length = static_cast<int>(steps1.size());
        best_binding_game = Transcript{init1, std::move(steps1), length};
      } else {
        const int length = static_cast<int>(steps2.size());
        best_binding_game = Transcript{init2, std::move(steps2), length};
      }
    }
  };

  auto complete_solo = [&](const GameState& from, const MoverStrategy& mover,
                           int goal_index) {
    detail::SoloResult solo =
        detail::solo_max_consumption(from, mover, goal_index, cap, budget);
    std::vector<TranscriptStep> full = shared_steps;
    full.insert(full.end(), solo.steps.begin(), solo.steps.end());
    return std::pair<HalfUnits, std::vector<TranscriptStep>>{
        solo.value, std::move(full)};
  };

  // Recursion over the observation-coincident prefix. `position`,
  // `consumption` and `clock` are common to both games here.
  auto coincident = [&](auto&& self, GridPosition position,
                        ConsumptionVector consumption, int clock) -> void {
    budget.charge();
    if (clock >= cap) throw HorizonExceeded(cap);
    const MoveDirection a1 = mover_game1.decide(MoverView{
        position, consumption, clock, 1, scenario.goals});
    const MoveDirection a2 = mover_game2.decide(MoverView{
        position, consumption, clock, 2, scenario.goals});

    if (a1 != a2) {
      // The Eater can tell the games apart from here on (including for the
      // reply to this very move), so each side is maximized independently.
      auto [v1, s1] = complete_solo(
          GameState(position, consumption, scenario.goals, 1, clock),
          mover_game1, 1);
      auto [v2, s2] = complete_solo(
          GameState(position, consumption, scenario.goals, 2, clock),
          mover_game2, 2);
      consider(v1, std::move(s1), v2, std::move(s2));
      return;
    }

    const GridPosition new_position = step(position, a1);
    const MoveClass move_class =
        classify_move(position, a1, scenario.goals);
    for (EaterAction reply :
         {EaterAction::kEatGoal1, EaterAction::kEatGoal2,
          EaterAction::kEatHalf}) {
      const ConsumptionVector after =
          apply_eater_action(consumption, reply);
      shared_steps.push_back(
          TranscriptStep{a1, move_class, reply, after, new_position});
      if (new_position == scenario.goals.g1()) {
        // Game 1 just ended; game 2 watched the Mover cross its fake goal.
        auto [v2, s2] = complete_solo(
            GameState(new_position, after, scenario.goals, 2, clock + 1),
            mover_game2, 2);
        consider(after.b1, shared_steps, v2, std::move(s2));
      } else if (new_position == scenario.goals.g2()) {
        auto [v1, s1] = complete_solo(
            GameState(new_position, after, scenario.goals, 1, clock + 1),
            mover_game1, 1);
        consider(v1, std::move(s1), after.b2, shared_steps);
      } else {
        self(self, new_position, after, clock + 1);
      }
      shared_steps.pop_back();
    }
  };

  if (is_terminal(init1)) {
    auto [v2, s2] = complete_solo(init2, mover_game2, 2);
    consider(init1.consumption.b1, {}, v2, std::move(s2));
  } else if (is_terminal(init2)) {
    auto [v1, s1] = complete_solo(init1, mover_game1, 1);
    consider(v1, std::move(s1), init2.consumption.b2, {});
  } else {
    coincident(coincident, scenario.start, scenario.b0, 0);
  }

  report.best_deviation_payoff = best;
  if (best > report.equilibrium_payoff)
    report.witness = std::move(best_binding_game);
  return report;
}

// Exhausts every goal-reaching Mover path of length at most shortest + slack
// against a fixed Eater and reports the least consumption at the true goal.
// The search is pruned to positions that can still make the length bound.
inline DeviationReport mover_best_response(const Scenario& scenario,
                                           int true_goal,
                                           const EaterStrategy& eater,
                                           const MoverStrategy& baseline,
                                           EnumerationBounds bounds = {}) {
  if (bounds.slack < 0) throw std::invalid_argument("slack must be >= 0");
  const GameState initial = scenario.initial_state(true_goal);
  const GridPosition goal = scenario.goals.goal(true_goal);
  const int cap = bounds.horizon_cap > 0 ? bounds.horizon_cap
                                         : default_horizon_cap(initial);

  DeviationReport report;
  report.deviator = Deviator::kMover;
  report.bounds = bounds;
  report.equilibrium_payoff =
      is_terminal(initial)
          ? initial.consumption.at(true_goal)
          : outcome(play(initial, baseline, eater, cap), true_goal);

  if (is_terminal(initial)) {
    // No move is ever made; the empty path is the only one.
    report.checked_count = 1;
    report.best_deviation_payoff = initial.consumption.at(true_goal);
    return report;
  }

  const int max_length = manhattan(scenario.start, goal) + bounds.slack;
  detail::BudgetCounter budget{0, bounds.budget};
  HalfUnits best(-1);
  bool have_best = false;
  std::vector<TranscriptStep> steps;
  std::vector<TranscriptStep> best_steps;

  auto dfs = [&](auto&& self, GridPosition position,
                 ConsumptionVector consumption, int length) -> void {
    budget.charge();
    for (MoveDirection dir : kAllDirections) {
      const GridPosition new_position = step(position, dir);
      if (length + 1 + manhattan(new_position, goal) > max_length) continue;
      const EaterAction reply = eater.decide(EaterView{
          position, new_position, dir, consumption, scenario.goals});
      const ConsumptionVector after =
          apply_eater_action(consumption, reply);
      steps.push_back(TranscriptStep{
          dir, classify_move(position, dir, scenario.goals), reply, after,
          new_position});
      if (new_position == goal) {
        ++report.checked_count;
        if (!have_best || after.at(true_goal) < best) {
          best = after.at(true_goal);
          best_steps = steps;
          have_best = true;
        }
      } else {
        self(self, new_position, after, length + 1);
      }
      steps.pop_back();
    }
  };
  dfs(dfs, scenario.start, scenario.b0, 0);

  report.best_deviation_payoff = best;
  if (best < report.equilibrium_payoff) {
    const int length = static_cast<int>(best_steps.size());
    report.witness = Transcript{initial, std::move(best_steps), length};
  }
  return report;
}

// Joint certificate: the candidate pair is simulated, compared against the
// closed-form value when it is the equilibrium pair, and stress-tested on
// all three no-deviation conditions.
struct EquilibriumCertificate {
  HalfUnits v1, v2, ve;               // closed-form values at the scenario
  HalfUnits sim_game1, sim_game2, sim_eater;  // candidate-pair payoffs
  bool closed_form_applicable = true;
  bool payoffs_match_closed_form = false;
  DeviationReport mover_game1, mover_game2, eater;
  bool inconclusive = false;
  bool pass = false;
};

inline EquilibriumCertificate verify_equilibrium(
    const Scenario& scenario, const MoverStrategy& mover_game1,
    const MoverStrategy& mover_game2, const EaterStrategy& eater,
    bool closed_form_applicable, EnumerationBounds bounds = {}) {
  const GameState init1 = scenario.initial_state(1);
  const GameState init2 = scenario.initial_state(2);
  const int cap = bounds.horizon_cap > 0
                      ? bounds.horizon_cap
                      : std::max(default_horizon_cap(init1),
                                 default_horizon_cap(init2));

  EquilibriumCertificate cert;
  cert.v1 = equilibrium_value(scenario.start, scenario.b0, scenario.goals, 1);
  cert.v2 = equilibrium_value(scenario.start, scenario.b0, scenario.goals, 2);
  cert.ve = std::min(cert.v1, cert.v2);
  cert.sim_game1 = is_terminal(init1)
                       ? init1.consumption.b1
                       : outcome(play(init1, mover_game1, eater, cap), 1);
  cert.sim_game2 = is_terminal(init2)
                       ? init2.consumption.b2
                       : outcome(play(init2, mover_game2, eater, cap), 2);
  cert.sim_eater = std::min(cert.sim_game1, cert.sim_game2);
  cert.closed_form_applicable = closed_form_applicable;
  cert.payoffs_match_closed_form = closed_form_applicable &&
                                   cert.sim_game1 == cert.v1 &&
                                   cert.sim_game2 == cert.v2;

  auto guarded = [&](auto&& search, DeviationReport& slot) {
    try {
      slot = search();
    } catch (const BoundsExceeded&) {
      slot = DeviationReport{};
      slot.bounds = bounds;
      slot.completed = false;
      cert.inconclusive = true;
    }
  };
  guarded(
      [&] {
        return mover_best_response(scenario, 1, eater, mover_game1, bounds);
      },
      cert.mover_game1);
  guarded(
      [&] {
        return mover_best_response(scenario, 2, eater, mover_game2, bounds);
      },
      cert.mover_game2);
  guarded(
      [&] {
        return eater_best_response(scenario, mover_game1, mover_game2, eater,
                                   bounds);
      },
      cert.eater);

  cert.pass = !cert.inconclusive && !cert.mover_game1.improving() &&
              !cert.mover_game2.improving() && !cert.eater.improving() &&
              (!closed_form_applicable || cert.payoffs_match_closed_form);
  return cert;
}

inline EquilibriumCertificate verify_equilibrium(const Scenario& scenario,
                                                 EnumerationBounds bounds = {}) {
  const EquilibriumMover mover;
  const EquilibriumEater eater;
  return verify_equilibrium(scenario, mover, mover, eater,
                            /*closed_form_applicable=*/true, bounds);
}

}  // namespace mover_eater
