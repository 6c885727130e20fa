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

#include <catch2/catch_amalgamated.hpp>

#include "mover_eater/engine.hpp"
#include "mover_eater/strategies.hpp"

using namespace mover_eater;

namespace {

// Never reaches any goal; used to exercise the horizon cap.
class DriftMover : public MoverStrategy {
 public:
  MoveDirection decide(const MoverView&) const override {
    return MoveDirection::kUp;
  }
};

}  // namespace

TEST_CASE("half-unit arithmetic is exact and ordered") {
  CHECK(HalfUnits::from_bananas(3).value == 6);
  CHECK((HalfUnits(3) + HalfUnits(4)).value == 7);
  CHECK((HalfUnits(3) - HalfUnits(4)).value == -1);
  CHECK((-HalfUnits(5)).value == -5);
  CHECK(HalfUnits(3) < HalfUnits(4));
  HalfUnits h(1);
  h += HalfUnits(2);
  CHECK(h == HalfUnits(3));
}

TEST_CASE("consumption vector indexing") {
  const ConsumptionVector b{HalfUnits(3), HalfUnits(5)};
  CHECK(b.at(1) == HalfUnits(3));
  CHECK(b.at(2) == HalfUnits(5));
  CHECK(b.total() == HalfUnits(8));
  CHECK_THROWS_AS(b.at(0), std::invalid_argument);
}

TEST_CASE("each eater action moves exactly one banana of mass") {
  const ConsumptionVector b{HalfUnits(2), HalfUnits(2)};
  const ConsumptionVector g1 = apply_eater_action(b, EaterAction::kEatGoal1);
  CHECK(g1.b1 == HalfUnits(4));
  CHECK(g1.b2 == HalfUnits(2));
  const ConsumptionVector g2 = apply_eater_action(b, EaterAction::kEatGoal2);
  CHECK(g2.b1 == HalfUnits(2));
  CHECK(g2.b2 == HalfUnits(4));
  const ConsumptionVector half = apply_eater_action(b, EaterAction::kEatHalf);
  CHECK(half.b1 == HalfUnits(3));
  CHECK(half.b2 == HalfUnits(3));
  CHECK(g1.total() == g2.total());
  CHECK(g1.total() == half.total());
}

TEST_CASE("game state validates its true goal and clock") {
  const GoalPair goals({0, 0}, {4, 0});
  CHECK_THROWS_AS(GameState({2, 3}, {}, goals, 3), std::invalid_argument);
  CHECK_THROWS_AS(GameState({2, 3}, {}, goals, 1, -1), std::invalid_argument);
  const GameState ok({2, 3}, {}, goals, 2);
  CHECK(ok.clock == 0);
  CHECK(ok.true_goal == 2);
}

TEST_CASE("the eater acts on the goal-reaching move as well") {
  // One step from the true goal: the game lasts one timestep and the eater
  // still banks its final action.
  const GoalPair goals({0, 0}, {4, 0});
  const GameState initial({1, 0}, {}, goals, 1);
  const EquilibriumMover mover;
  const HalfHalfEater eater;
  const Transcript tr = play(initial, mover, eater);
  REQUIRE(tr.terminal_time == 1);
  REQUIRE(tr.steps.size() == 1);
  CHECK(tr.steps[0].position_after == GridPosition{0, 0});
  CHECK(tr.steps[0].consumption_after.total() == HalfUnits(2));
}

TEST_CASE("advance refuses to run past the end of the game") {
  const GoalPair goals({0, 0}, {4, 0});
  const GameState done({0, 0}, {}, goals, 1);
  const EquilibriumMover mover;
  const EquilibriumEater eater;
  CHECK_THROWS_AS(advance(done, mover, eater), std::logic_error);
}

TEST_CASE("starting on the true goal ends the game immediately") {
  const GoalPair goals({0, 0}, {4, 0});
  const ConsumptionVector b0{HalfUnits::from_bananas(2), HalfUnits(0)};
  const GameState initial({0, 0}, b0, goals, 1);
  const EquilibriumMover mover;
  const EquilibriumEater eater;
  const Transcript tr = play(initial, mover, eater);
  CHECK(tr.terminal_time == 0);
  CHECK(tr.steps.empty());
  CHECK(outcome(tr, 1) == HalfUnits(4));
  CHECK(outcome(tr, 2) == HalfUnits(0));
}

TEST_CASE("non-terminating movers hit the horizon cap") {
  const GoalPair goals({0, 0}, {4, 0});
  const GameState initial({2, 3}, {}, goals, 1);
  const DriftMover mover;
  const HalfHalfEater eater;
  CHECK_THROWS_AS(play(initial, mover, eater, 16), HorizonExceeded);
  CHECK_THROWS_AS(play(initial, mover, eater), HorizonExceeded);
  CHECK_THROWS_AS(play(initial, mover, eater, 0), std::invalid_argument);
}

TEST_CASE("scripted paths that run out of moves are invalid") {
  const GoalPair goals({0, 0}, {4, 0});
  const GameState initial({2, 3}, {}, goals, 1);
  const ScriptedMover mover({MoveDirection::kDown});
  const HalfHalfEater eater;
  CHECK_THROWS_AS(play(initial, mover, eater), PathInvalid);
}

TEST_CASE("eater payoff requires a matched game pair") {
  const GoalPair goals({0, 0}, {4, 0});
  const EquilibriumMover mover;
  const EquilibriumEater eater;
  const Transcript game1 = play(GameState({2, 3}, {}, goals, 1), mover, eater);
  const Transcript game2 = play(GameState({2, 3}, {}, goals, 2), mover, eater);
  CHECK(eater_payoff(game1, game2) == HalfUnits(7));
  CHECK_THROWS_AS(eater_payoff(game2, game1), std::invalid_argument);
  const Transcript other = play(GameState({1, 1}, {}, goals, 2), mover, eater);
  CHECK_THROWS_AS(eater_payoff(game1, other), std::invalid_argument);
}

TEST_CASE("replay reproduces a played game exactly") {
  const GoalPair goals({2, 0}, {6, 0});
  const GameState initial({4, 4}, {}, goals, 1);
  const EquilibriumMover mover;
  const EquilibriumEater eater;
  const Transcript tr = play(initial, mover, eater);
  const GameState final_state = replay(tr);
  CHECK(final_state.position == goals.g1());
  CHECK(final_state.clock == tr.terminal_time);
  CHECK(final_state.consumption == tr.steps.back().consumption_after);
}

TEST_CASE("replay rejects tampered transcripts") {
  const GoalPair goals({0, 0}, {4, 0});
  const GameState initial({1, 0}, {}, goals, 1);
  const EquilibriumMover mover;
  const EquilibriumEater eater;
  const Transcript good = play(initial, mover, eater);

  Transcript wrong_consumption = good;
  wrong_consumption.steps[0].consumption_after.b1 += HalfUnits(2);
  CHECK_THROWS_AS(replay(wrong_consumption), std::logic_error);

  Transcript wrong_position = good;
  wrong_position.steps[0].position_after = GridPosition{9, 9};
  CHECK_THROWS_AS(replay(wrong_position), std::logic_error);

  Transcript wrong_class = good;
  wrong_class.steps[0].move_class = MoveClass::Ambiguous();
  CHECK_THROWS_AS(replay(wrong_class), std::logic_error);

  Transcript truncated = good;
  truncated.steps.clear();
  CHECK_THROWS_AS(replay(truncated), std::logic_error);

  Transcript extended = good;
  extended.steps.push_back(extended.steps.back());
  CHECK_THROWS_AS(replay(extended), std::logic_error);

  Transcript wrong_time = good;
  wrong_time.terminal_time += 1;
  CHECK_THROWS_AS(replay(wrong_time), std::logic_error);
}

TEST_CASE("consumption grows by exactly one banana per timestep") {
  const GoalPair goals({0, 0}, {3, 2});
  const ConsumptionVector b0{HalfUnits::from_bananas(1),
                             HalfUnits::from_bananas(1)};
  const GameState initial({-2, 4}, b0, goals, 2);
  const EquilibriumMover mover;
  const EquilibriumEater eater;
  const Transcript tr = play(initial, mover, eater);
  HalfUnits expected = b0.total();
  for (const TranscriptStep& step : tr.steps) {
    expected += HalfUnits(2);
    CHECK(step.consumption_after.total() == expected);
  }
}
