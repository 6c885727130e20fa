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
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace mover_eater {

// Integer lattice point. The grid is unbounded; all arithmetic is exact.
struct GridPosition {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(GridPosition, GridPosition) = default;
};

// The four unit moves. Up increases y, Right increases x.
// kAllDirections doubles as the deterministic tie-break priority.
enum class MoveDirection { kUp, kDown, kLeft, kRight };

inline constexpr std::array<MoveDirection, 4> kAllDirections = {
    MoveDirection::kUp, MoveDirection::kDown, MoveDirection::kLeft,
    MoveDirection::kRight};

constexpr GridPosition step(GridPosition p, MoveDirection dir) {
  switch (dir) {
    case MoveDirection::kUp:
      return {p.x, p.y + 1};
    case MoveDirection::kDown:
      return {p.x, p.y - 1};
    case MoveDirection::kLeft:
      return {p.x - 1, p.y};
    case MoveDirection::kRight:
      return {p.x + 1, p.y};
  }
  throw std::invalid_argument("invalid move direction");
}

// The two candidate goals. Distinct by construction.
class GoalPair {
 public:
  GoalPair(GridPosition g1, GridPosition g2) : g1_(g1), g2_(g2) {
    if (g1 == g2) throw std::invalid_argument("goals must be distinct");
  }

  GridPosition g1() const { return g1_; }
  GridPosition g2() const { return g2_; }

  // index is 1 or 2.
  GridPosition goal(int index) const {
    if (index == 1) return g1_;
    if (index == 2) return g2_;
    throw std::invalid_argument("goal index must be 1 or 2");
  }

  static int other(int index) {
    if (index == 1) return 2;
    if (index == 2) return 1;
    throw std::invalid_argument("goal index must be 1 or 2");
  }

  friend bool operator==(const GoalPair&, const GoalPair&) = default;

 private:
  GridPosition g1_;
  GridPosition g2_;
};

inline int manhattan(GridPosition a, GridPosition b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

// Change in distance to g caused by one move; always +1 or -1. Moving along
// a coordinate where p already matches g can only grow that coordinate's gap.
inline int delta_distance(GridPosition p, MoveDirection dir, GridPosition g) {
  return manhattan(step(p, dir), g) - manhattan(p, g);
}

// A move either changes both goal distances equally (ambiguous) or decreases
// one and increases the other (explicit toward the approached goal). Every
// move falls in exactly one class.
struct MoveClass {
  bool is_ambiguous = true;
  int toward = 0;  // 1 or 2 when explicit, 0 when ambiguous

  static constexpr MoveClass Ambiguous() { return {true, 0}; }
  static constexpr MoveClass Explicit(int goal_index) {
    return {false, goal_index};
  }

  friend constexpr bool operator==(MoveClass, MoveClass) = default;
};

inline MoveClass classify_move(GridPosition p, MoveDirection dir,
                               const GoalPair& goals) {
  const int d1 = delta_distance(p, dir, goals.g1());
  const int d2 = delta_distance(p, dir, goals.g2());
  if (d1 == d2) return MoveClass::Ambiguous();
  return MoveClass::Explicit(d1 < d2 ? 1 : 2);
}

// Partition of the plane relative to the goals' closed bounding rectangle:
//   R1: inside the rectangle (no ambiguous move exists on a shortest path),
//   R3: both coordinates strictly outside the goals' ranges,
//   R2: everything else.
enum class Region { kR1 = 1, kR2 = 2, kR3 = 3 };

inline Region region_of(GridPosition p, const GoalPair& goals) {
  // std::minmax would hand back references into the g1()/g2() temporaries.
  const int min_x = std::min(goals.g1().x, goals.g2().x);
  const int max_x = std::max(goals.g1().x, goals.g2().x);
  const int min_y = std::min(goals.g1().y, goals.g2().y);
  const int max_y = std::max(goals.g1().y, goals.g2().y);
  const bool x_inside = min_x <= p.x && p.x <= max_x;
  const bool y_inside = min_y <= p.y && p.y <= max_y;
  if (x_inside && y_inside) return Region::kR1;
  if (!x_inside && !y_inside) return Region::kR3;
  return Region::kR2;
}

// Minimum numbers of ambiguous and explicit moves on a path to each goal.
// The ambiguous count is shared: no single move can change the two explicit
// counts at once, and every shortest path realizes these minima.
struct StepCounts {
  int n_ambiguous = 0;
  int n_explicit_1 = 0;
  int n_explicit_2 = 0;

  int explicit_toward(int goal_index) const {
    if (goal_index == 1) return n_explicit_1;
    if (goal_index == 2) return n_explicit_2;
    throw std::invalid_argument("goal index must be 1 or 2");
  }

  friend constexpr bool operator==(StepCounts, StepCounts) = default;
};

inline StepCounts step_counts(GridPosition p, const GoalPair& goals) {
  const int d1 = manhattan(p, goals.g1());
  const int d2 = manhattan(p, goals.g2());
  const int separation = manhattan(goals.g1(), goals.g2());
  // d1 + d2 and the goal separation always share parity, so these divide.
  return StepCounts{(d1 + d2 - separation) / 2, (d1 - d2 + separation) / 2,
                    (d2 - d1 + separation) / 2};
}

}  // namespace mover_eater
