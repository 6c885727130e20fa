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

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mover_eater/geometry.hpp"

namespace mover_eater {

// Consumption is tracked in integer half-banana units (one eater action moves
// exactly 2 half-units), so every quantity in the game is exact. Signed so
// the same type can carry differences.
struct HalfUnits {
  int value = 0;

  constexpr HalfUnits() = default;
  explicit constexpr HalfUnits(int v) : value(v) {}
  static constexpr HalfUnits from_bananas(int bananas) {
    return HalfUnits(2 * bananas);
  }

  friend constexpr HalfUnits operator+(HalfUnits a, HalfUnits b) {
    return HalfUnits(a.value + b.value);
  }
  friend constexpr HalfUnits operator-(HalfUnits a, HalfUnits b) {
    return HalfUnits(a.value - b.value);
  }
  constexpr HalfUnits operator-() const { return HalfUnits(-value); }
  HalfUnits& operator+=(HalfUnits other) {
    value += other.value;
    return *this;
  }
  friend constexpr auto operator<=>(HalfUnits, HalfUnits) = default;
};

// Cumulative consumption at each goal.
struct ConsumptionVector {
  HalfUnits b1;
  HalfUnits b2;

  HalfUnits at(int goal_index) const {
    if (goal_index == 1) return b1;
    if (goal_index == 2) return b2;
    throw std::invalid_argument("goal index must be 1 or 2");
  }
  HalfUnits total() const { return b1 + b2; }

  friend constexpr bool operator==(ConsumptionVector, ConsumptionVector) =
      default;
};

// Eat a whole banana from one goal, or half a banana from each.
enum class EaterAction { kEatGoal1, kEatGoal2, kEatHalf };

inline ConsumptionVector apply_eater_action(ConsumptionVector b,
                                            EaterAction action) {
  switch (action) {
    case EaterAction::kEatGoal1:
      return {b.b1 + HalfUnits(2), b.b2};
    case EaterAction::kEatGoal2:
      return {b.b1, b.b2 + HalfUnits(2)};
    case EaterAction::kEatHalf:
      return {b.b1 + HalfUnits(1), b.b2 + HalfUnits(1)};
  }
  throw std::invalid_argument("invalid eater action");
}

// Full game configuration at one point in time. true_goal is the Mover's
// private information and never changes after construction.
struct GameState {
  GridPosition position;
  ConsumptionVector consumption;
  int clock = 0;
  GoalPair goals;
  int true_goal = 1;

  GameState(GridPosition position, ConsumptionVector consumption,
            GoalPair goals, int true_goal, int clock = 0)
      : position(position),
        consumption(consumption),
        clock(clock),
        goals(goals),
        true_goal(true_goal) {
    if (true_goal != 1 && true_goal != 2)
      throw std::invalid_argument("true goal must be 1 or 2");
    if (clock < 0) throw std::invalid_argument("clock must be nonnegative");
  }
};

// What the Mover sees when choosing its move at time t. The clock is the
// number of completed timesteps, which lets scripted policies replay a path
// by step index.
struct MoverView {
  GridPosition position;
  ConsumptionVector consumption;
  int clock = 0;
  int true_goal = 1;
  GoalPair goals;
};

// What the Eater sees before its action at time t: the move it just observed
// and the consumption so far. It never sees which goal is true.
struct EaterView {
  GridPosition prev_position;
  GridPosition new_position;
  MoveDirection last_mover_action;
  ConsumptionVector consumption;
  GoalPair goals;
};

// Deterministic decision interfaces. A single Eater strategy object serves
// both candidate games; the type system already keeps the true goal out of
// its view.
class MoverStrategy {
 public:
  virtual ~MoverStrategy() = default;
  virtual MoveDirection decide(const MoverView& view) const = 0;

  // True when decide() never reads view.consumption. Enumeration code may
  // then use the dominant single completion instead of branching on every
  // eater action.
  virtual bool consumption_independent() const { return false; }
};

class EaterStrategy {
 public:
  virtual ~EaterStrategy() = default;
  virtual EaterAction decide(const EaterView& view) const = 0;
};

// One full timestep: the Mover's move, its observable classification, the
// Eater's reply, and the resulting state.
struct TranscriptStep {
  MoveDirection mover_action;
  MoveClass move_class;
  EaterAction eater_action;
  ConsumptionVector consumption_after;
  GridPosition position_after;

  friend constexpr bool operator==(TranscriptStep, TranscriptStep) = default;
};

// Complete, replayable record of one game.
struct Transcript {
  GameState initial;
  std::vector<TranscriptStep> steps;
  int terminal_time = 0;
};

inline bool is_terminal(const GameState& s) {
  return s.position == s.goals.goal(s.true_goal);
}

// Thrown by play() when the Mover never reaches the true goal within the cap.
class HorizonExceeded : public std::runtime_error {
 public:
  explicit HorizonExceeded(int cap)
      : std::runtime_error("game did not terminate within " +
                           std::to_string(cap) + " steps") {}
};

struct StepRecord {
  GameState next;
  TranscriptStep step;
};

// Advances one full timestep: Mover moves, then the Eater acts, even when
// the move just ended the game (the Eater's last action lands at T-1).
inline StepRecord advance(const GameState& s, const MoverStrategy& mover,
                          const EaterStrategy& eater) {
  if (is_terminal(s))
    throw std::logic_error("advance() called on a terminal state");

  const MoveDirection action = mover.decide(
      MoverView{s.position, s.consumption, s.clock, s.true_goal, s.goals});
  const GridPosition new_position = step(s.position, action);  // validates
  const MoveClass move_class = classify_move(s.position, action, s.goals);

  const EaterAction reply = eater.decide(
      EaterView{s.position, new_position, action, s.consumption, s.goals});
  const ConsumptionVector new_consumption =
      apply_eater_action(s.consumption, reply);

  GameState next(new_position, new_consumption, s.goals, s.true_goal,
                 s.clock + 1);
  return StepRecord{std::move(next),
                    TranscriptStep{action, move_class, reply, new_consumption,
                                   new_position}};
}

// Cap that any goal-reaching strategy comfortably fits under; divergent
// strategies then surface as HorizonExceeded instead of an endless loop.
inline int default_horizon_cap(const GameState& initial) {
  const StepCounts counts = step_counts(initial.position, initial.goals);
  return counts.n_ambiguous +
         std::max(counts.n_explicit_1, counts.n_explicit_2) + 32;
}

inline Transcript play(const GameState& initial, const MoverStrategy& mover,
                       const EaterStrategy& eater, int horizon_cap) {
  if (horizon_cap < 1) throw std::invalid_argument("horizon cap must be >= 1");
  Transcript transcript{initial, {}, 0};
  GameState state = initial;
  while (!is_terminal(state)) {
    if (state.clock - initial.clock >= horizon_cap)
      throw HorizonExceeded(horizon_cap);
    StepRecord record = advance(state, mover, eater);
    state = std::move(record.next);
    transcript.steps.push_back(record.step);
  }
  transcript.terminal_time = state.clock;
  return transcript;
}

inline Transcript play(const GameState& initial, const MoverStrategy& mover,
                       const EaterStrategy& eater) {
  return play(initial, mover, eater, default_horizon_cap(initial));
}

// Consumption at goal i when the game ended.
inline HalfUnits outcome(const Transcript& tr, int goal_index) {
  const ConsumptionVector final_consumption =
      tr.steps.empty() ? tr.initial.consumption
                       : tr.steps.back().consumption_after;
  return final_consumption.at(goal_index);
}

// Worst case across the two candidate games sharing one initial condition.
inline HalfUnits eater_payoff(const Transcript& game1,
                              const Transcript& game2) {
  if (game1.initial.true_goal != 1 || game2.initial.true_goal != 2)
    throw std::invalid_argument("transcripts must be the game-1/game-2 pair");
  if (!(game1.initial.position == game2.initial.position) ||
      !(game1.initial.consumption == game2.initial.consumption) ||
      !(game1.initial.goals == game2.initial.goals))
    throw std::invalid_argument("transcripts start from different conditions");
  return std::min(outcome(game1, 1), outcome(game2, 2));
}

// Re-applies every recorded step from the initial state and checks the log
// against the dynamics. Returns the final state; throws on any mismatch.
inline GameState replay(const Transcript& tr) {
  GameState state = tr.initial;
  for (const TranscriptStep& recorded : tr.steps) {
    if (is_terminal(state))
      throw std::logic_error("transcript continues past a terminal state");
    const GridPosition new_position = step(state.position,
                                           recorded.mover_action);
    const ConsumptionVector new_consumption =
        apply_eater_action(state.consumption, recorded.eater_action);
    if (!(new_position == recorded.position_after) ||
        !(new_consumption == recorded.consumption_after) ||
        !(classify_move(state.position, recorded.mover_action, state.goals) ==
          recorded.move_class))
      throw std::logic_error("transcript does not replay to its own record");
    state = GameState(new_position, new_consumption, state.goals,
                      state.true_goal, state.clock + 1);
  }
  if (!is_terminal(state))
    throw std::logic_error("transcript does not end at the true goal");
  if (state.clock != tr.terminal_time)
    throw std::logic_error("transcript terminal time is inconsistent");
  return state;
}

}  // namespace mover_eater
