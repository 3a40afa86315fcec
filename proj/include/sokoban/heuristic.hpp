#pragma once

#include <string_view>

#include "sokoban/board.hpp"
#include "sokoban/state.hpp"

namespace sokoban {

// Zero is the blind estimator (f = g), used to check that A* degenerates to
// uniform-cost search.
enum class HeuristicKind { PrePaired, NearestGoal, Zero };

std::string_view to_string(HeuristicKind kind);

/// Pairs the k-th box with the k-th goal, both in row-major order, and sums
/// their Manhattan distances. Cheap, but not admissible in general.
int h_prepaired(const Grid& grid, const State& state);

/// Sum over boxes of the Manhattan distance to the closest goal. Admissible
/// and consistent for unit push cost.
int h_nearest_goal(const Grid& grid, const State& state);

int estimate(HeuristicKind kind, const Grid& grid, const State& state);

}  // namespace sokoban
