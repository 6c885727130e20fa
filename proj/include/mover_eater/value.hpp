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
#include <stdexcept>

#include "mover_eater/engine.hpp"
#include "mover_eater/geometry.hpp"

namespace mover_eater {

// Scalar bookkeeping behind the Eater's decisions and the closed-form game
// value. The c-factor of a goal is consumption-so-far plus remaining
// distance: with full knowledge of the true goal the Eater would secure
// exactly c at it (one banana per remaining step). Distance therefore
// contributes 2 half-units per cell.

inline HalfUnits c_plus(HalfUnits b_i, int distance_i) {
  if (distance_i < 0) throw std::invalid_argument("distance must be >= 0");
  return b_i + HalfUnits::from_bananas(distance_i);
}

// Same factor sampled between the Mover's move and the Eater's reply:
// consumption before the reply, distance after the move.
inline HalfUnits c_hat(HalfUnits b_i, int distance_i_next) {
  return c_plus(b_i, distance_i_next);
}

namespace detail {
// Differences of c-factors stay whole bananas only while the two consumption
// entries agree in parity, which every reachable state preserves (starts are
// whole bananas; every action shifts the gap by 0 or a whole banana).
inline void require_even_gap(const ConsumptionVector& b) {
  if ((b.b1 - b.b2).value % 2 != 0)
    throw std::invalid_argument(
        "consumption entries must differ by whole bananas");
}
}  // namespace detail

// c_i - c_{-i}; antisymmetric in the goal index.
inline HalfUnits delta_c(GridPosition p, const ConsumptionVector& b,
                         const GoalPair& goals, int goal_index) {
  detail::require_even_gap(b);
  const int other = GoalPair::other(goal_index);
  return c_plus(b.at(goal_index), manhattan(p, goals.goal(goal_index))) -
         c_plus(b.at(other), manhattan(p, goals.goal(other)));
}

// Same difference on the mid-step factors, straight from what the Eater sees.
inline HalfUnits delta_c_hat(const EaterView& view, int goal_index) {
  detail::require_even_gap(view.consumption);
  const int other = GoalPair::other(goal_index);
  return c_hat(view.consumption.at(goal_index),
               manhattan(view.new_position, view.goals.goal(goal_index))) -
         c_hat(view.consumption.at(other),
               manhattan(view.new_position, view.goals.goal(other)));
}

// Consumption at goal i when both sides play their equilibrium strategies,
// in closed form. With n ambiguous moves pending and dc = delta_c:
//   n <= |dc| (in bananas): the conservative replies all hit one goal, so
//     V = c_i - n * (1 + sgn(dc)) / 2 bananas;
//   n >  |dc|: the gap reaches zero and the remaining replies split, so
//     V = c_i - (n + dc) / 2 bananas.
// Everything below is in half-units, where both branches stay integral.
inline HalfUnits equilibrium_value(GridPosition p, const ConsumptionVector& b,
                                   const GoalPair& goals, int goal_index) {
  const StepCounts counts = step_counts(p, goals);
  const int n_ambiguous = counts.n_ambiguous;
  const HalfUnits c_i =
      c_plus(b.at(goal_index), manhattan(p, goals.goal(goal_index)));
  const HalfUnits dc = delta_c(p, b, goals, goal_index);

  if (HalfUnits::from_bananas(n_ambiguous) <= HalfUnits(std::abs(dc.value))) {
    const int sign = (dc.value > 0) - (dc.value < 0);
    return c_i - HalfUnits(n_ambiguous * (1 + sign));
  }
  return c_i - HalfUnits(n_ambiguous + dc.value / 2);
}

// Worst case over the two candidate games.
inline HalfUnits eater_equilibrium_value(GridPosition p,
                                         const ConsumptionVector& b,
                                         const GoalPair& goals) {
  return std::min(equilibrium_value(p, b, goals, 1),
                  equilibrium_value(p, b, goals, 2));
}

// How much the Eater loses at goal i for not knowing the true goal: the
// complete-information take c_i minus the equilibrium outcome. Never
// negative.
inline HalfUnits value_of_information(GridPosition p,
                                      const ConsumptionVector& b,
                                      const GoalPair& goals, int goal_index) {
  return c_plus(b.at(goal_index), manhattan(p, goals.goal(goal_index))) -
         equilibrium_value(p, b, goals, goal_index);
}

}  // namespace mover_eater
