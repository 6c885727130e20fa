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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mover_eater/engine.hpp"
#include "mover_eater/geometry.hpp"
#include "mover_eater/value.hpp"

namespace mover_eater {

class PathInvalid : public std::runtime_error {
 public:
  explicit PathInvalid(const std::string& what) : std::runtime_error(what) {}
};

// Equilibrium Mover move: stay on a shortest path to the true goal, spending
// every available ambiguous move before any explicit one. Ties are broken by
// the fixed priority Up > Down > Left > Right, so play is reproducible.
inline MoveDirection equilibrium_mover_move(const MoverView& view) {
  const GridPosition goal = view.goals.goal(view.true_goal);
  if (view.position == goal)
    throw std::logic_error("mover asked to move while already at the goal");

  std::optional<MoveDirection> explicit_move;
  for (MoveDirection dir : kAllDirections) {
    if (delta_distance(view.position, dir, goal) != -1) continue;
    if (classify_move(view.position, dir, view.goals).is_ambiguous) return dir;
    if (!explicit_move) explicit_move = dir;
  }
  // A shortest-path move always exists off the goal, and an ambiguous one
  // exists exactly while the position is outside the goals' rectangle.
  return *explicit_move;
}

// Equilibrium Eater reply. After an explicit move, exploit: eat from the
// approached goal. After an ambiguous move, play conservative: eat from the
// goal whose mid-step c-factor is behind, or split when they are level.
inline EaterAction equilibrium_eater_action(const EaterView& view) {
  const MoveClass move_class =
      classify_move(view.prev_position, view.last_mover_action, view.goals);
  if (!move_class.is_ambiguous) {
    return move_class.toward == 1 ? EaterAction::kEatGoal1
                                  : EaterAction::kEatGoal2;
  }
  const HalfUnits gap = delta_c_hat(view, 1);
  if (gap < HalfUnits(0)) return EaterAction::kEatGoal1;
  if (gap > HalfUnits(0)) return EaterAction::kEatGoal2;
  return EaterAction::kEatHalf;
}

// Simpler Eater: exploit explicit moves, always split after ambiguous ones.
// Can out-eat the equilibrium reply in one game at the cost of the other.
inline EaterAction half_half_eater_action(const EaterView& view) {
  const MoveClass move_class =
      classify_move(view.prev_position, view.last_mover_action, view.goals);
  if (!move_class.is_ambiguous) {
    return move_class.toward == 1 ? EaterAction::kEatGoal1
                                  : EaterAction::kEatGoal2;
  }
  return EaterAction::kEatHalf;
}

class EquilibriumMover : public MoverStrategy {
 public:
  MoveDirection decide(const MoverView& view) const override {
    return equilibrium_mover_move(view);
  }
  bool consumption_independent() const override { return true; }
};

class EquilibriumEater : public EaterStrategy {
 public:
  EaterAction decide(const EaterView& view) const override {
    return equilibrium_eater_action(view);
  }
};

class HalfHalfEater : public EaterStrategy {
 public:
  EaterAction decide(const EaterView& view) const override {
    return half_half_eater_action(view);
  }
};

// Replays a fixed move list by step index.
class ScriptedMover : public MoverStrategy {
 public:
  explicit ScriptedMover(std::vector<MoveDirection> path)
      : path_(std::move(path)) {}

  MoveDirection decide(const MoverView& view) const override {
    if (view.clock < 0 || static_cast<std::size_t>(view.clock) >= path_.size())
      throw PathInvalid("scripted path exhausted before reaching the goal");
    return path_[static_cast<std::size_t>(view.clock)];
  }
  bool consumption_independent() const override { return true; }

  const std::vector<MoveDirection>& path() const { return path_; }

 private:
  std::vector<MoveDirection> path_;
};

// Builds a ScriptedMover after checking the path actually ends the game:
// walked from `start`, it must first reach the true goal exactly at its
// final step.
inline ScriptedMover scripted_mover(std::vector<MoveDirection> path,
                                    GridPosition start,
                                    GridPosition true_goal) {
  GridPosition position = start;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (position == true_goal)
      throw PathInvalid("path reaches the goal before its final step");
    position = step(position, path[i]);
  }
  if (!(position == true_goal))
    throw PathInvalid("path does not terminate at the true goal");
  return ScriptedMover(std::move(path));
}

namespace detail {
// Shortest-path move toward `goal`, preferring `want_ambiguous` moves when
// one exists; falls back to the other class. Priority order breaks ties.
inline MoveDirection shortest_path_move(GridPosition position,
                                        const GoalPair& goals,
                                        GridPosition goal,
                                        bool want_ambiguous) {
  std::optional<MoveDirection> fallback;
  for (MoveDirection dir : kAllDirections) {
    if (delta_distance(position, dir, goal) != -1) continue;
    if (classify_move(position, dir, goals).is_ambiguous == want_ambiguous)
      return dir;
    if (!fallback) fallback = dir;
  }
  if (!fallback)
    throw std::logic_error("no shortest-path move exists at the goal");
  return *fallback;
}
}  // namespace detail

// Shortest path taking explicit moves as early as the geometry allows and
// ambiguous moves last, the reverse of the equilibrium ordering.
inline std::vector<MoveDirection> build_explicit_first_path(
    GridPosition start, const GoalPair& goals, int true_goal) {
  const GridPosition goal = goals.goal(true_goal);
  std::vector<MoveDirection> path;
  GridPosition position = start;
  while (!(position == goal)) {
    const MoveDirection dir =
        detail::shortest_path_move(position, goals, goal,
                                   /*want_ambiguous=*/false);
    path.push_back(dir);
    position = step(position, dir);
  }
  return path;
}

// k explicit moves toward the fake goal, then the equilibrium ordering
// (ambiguous first) from wherever that leaves the Mover. Requires an
// explicit move toward the fake goal to exist at each of the k steps, which
// rules out full-ambiguity starts.
inline std::vector<MoveDirection> build_exaggeration_path(GridPosition start,
                                                          const GoalPair& goals,
                                                          int true_goal,
                                                          int k) {
  if (k < 0) throw std::invalid_argument("exaggeration depth must be >= 0");
  const int fake_goal = GoalPair::other(true_goal);
  std::vector<MoveDirection> path;
  GridPosition position = start;

  for (int i = 0; i < k; ++i) {
    std::optional<MoveDirection> feint;
    for (MoveDirection dir : kAllDirections) {
      const MoveClass move_class = classify_move(position, dir, goals);
      if (!move_class.is_ambiguous && move_class.toward == fake_goal) {
        feint = dir;
        break;
      }
    }
    if (!feint)
      throw std::invalid_argument(
          "no explicit move toward the fake goal is available");
    path.push_back(*feint);
    position = step(position, *feint);
  }

  const GridPosition goal = goals.goal(true_goal);
  while (!(position == goal)) {
    const MoveDirection dir =
        detail::shortest_path_move(position, goals, goal,
                                   /*want_ambiguous=*/true);
    path.push_back(dir);
    position = step(position, dir);
  }
  return path;
}

// Equilibrium-ordered path as an explicit move list (ambiguous prefix, then
// explicit moves), matching what EquilibriumMover plays step by step.
inline std::vector<MoveDirection> build_equilibrium_path(GridPosition start,
                                                         const GoalPair& goals,
                                                         int true_goal) {
  const GridPosition goal = goals.goal(true_goal);
  std::vector<MoveDirection> path;
  GridPosition position = start;
  while (!(position == goal)) {
    const MoveDirection dir =
        detail::shortest_path_move(position, goals, goal,
                                   /*want_ambiguous=*/true);
    path.push_back(dir);
    position = step(position, dir);
  }
  return path;
}

}  // namespace mover_eater
