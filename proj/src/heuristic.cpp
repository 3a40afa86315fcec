#include "sokoban/heuristic.hpp"

#include <algorithm>
#include <limits>

namespace sokoban {

std::string_view to_string(HeuristicKind kind) {
    switch (kind) {
        case HeuristicKind::PrePaired: return "prepaired";
        case HeuristicKind::NearestGoal: return "nearest";
        case HeuristicKind::Zero: return "zero";
    }
    return "unknown";
}

int h_prepaired(const Grid& grid, const State& state) {
    const auto& goals = grid.goals();
    int total = 0;
    for (std::size_t k = 0; k < state.boxes.size() && k < goals.size(); ++k)
        total += manhattan(state.boxes[k], goals[k]);
    return total;
}

int h_nearest_goal(const Grid& grid, const State& state) {
    int total = 0;
    for (const Square& b : state.boxes) {
        int best = std::numeric_limits<int>::max();
        for (const Square& g : grid.goals()) best = std::min(best, manhattan(b, g));
        total += best;
    }
    return total;
}

int estimate(HeuristicKind kind, const Grid& grid, const State& state) {
    switch (kind) {
        case HeuristicKind::PrePaired: return h_prepaired(grid, state);
        case HeuristicKind::NearestGoal: return h_nearest_goal(grid, state);
        case HeuristicKind::Zero: return 0;
    }
    return 0;
}

}  // namespace sokoban
