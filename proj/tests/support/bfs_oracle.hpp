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
#include <map>
#include <tuple>
#include <utility>

#include "mover_eater/geometry.hpp"

namespace mover_eater::testing {

// Reference computation of per-class move counts, independent of the closed
// form under test: walk every shortest path to the goal by dynamic
// programming and track the minimum and maximum number of ambiguous moves
// encountered. The library's step_counts() claims these coincide.
struct AmbiguousCountRange {
  int min_ambiguous = 0;
  int max_ambiguous = 0;
};

inline AmbiguousCountRange ambiguous_count_range(
    GridPosition start, const GoalPair& goals, int goal_index,
    std::map<std::pair<int, int>, AmbiguousCountRange>* memo) {
  const GridPosition goal = goals.goal(goal_index);
  if (start == goal) return {0, 0};
  const auto key = std::make_pair(start.x, start.y);
  if (const auto it = memo->find(key); it != memo->end()) return it->second;

  AmbiguousCountRange range{1 << 20, -(1 << 20)};
  const int here = manhattan(start, goal);
  for (MoveDirection dir : kAllDirections) {
    const GridPosition next = step(start, dir);
    if (manhattan(next, goal) != here - 1) continue;
    const AmbiguousCountRange tail =
        ambiguous_count_range(next, goals, goal_index, memo);
    const int cost = classify_move(start, dir, goals).is_ambiguous ? 1 : 0;
    range.min_ambiguous = std::min(range.min_ambiguous,
                                   tail.min_ambiguous + cost);
    range.max_ambiguous = std::max(range.max_ambiguous,
                                   tail.max_ambiguous + cost);
  }
  memo->emplace(key, range);
  return range;
}

inline AmbiguousCountRange ambiguous_count_range(GridPosition start,
                                                 const GoalPair& goals,
                                                 int goal_index) {
  std::map<std::pair<int, int>, AmbiguousCountRange> memo;
  return ambiguous_count_range(start, goals, goal_index, &memo);
}

// Manhattan distance from a cell to the closed goal-bounding rectangle, a
// second independent formulation of the shared ambiguous-move count.
inline int rectangle_distance(GridPosition p, const GoalPair& goals) {
  // std::minmax would hand back references into the g1()/g2() temporaries.
  const int min_x = std::min(goals.g1().x, goals.g2().x);
  const int max_x = std::max(goals.g1().x, goals.g2().x);
  const int min_y = std::min(goals.g1().y, goals.g2().y);
  const int max_y = std::max(goals.g1().y, goals.g2().y);
  const int dx = std::max({0, min_x - p.x, p.x - max_x});
  const int dy = std::max({0, min_y - p.y, p.y - max_y});
  return dx + dy;
}

}  // namespace mover_eater::testing
