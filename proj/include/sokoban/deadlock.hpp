#pragma once

#include <vector>

#include "sokoban/board.hpp"
#include "sokoban/state.hpp"

namespace sokoban {

/// Static single-box liveness: dead(s) holds when a lone box on s can never
/// be brought to any goal. Walls are outside the map's domain.
class DeadSquareMap {
public:
    explicit DeadSquareMap(const Grid& grid);

    bool is_dead(Square s) const;
    bool is_live(Square s) const;
    /// Dead floor squares in row-major order.
    std::vector<Square> dead() const;

    bool any_dead(const BoxSet& boxes) const;

private:
    int width_;
    int height_;
    std::vector<bool> wall_;
    std::vector<bool> live_;
};

DeadSquareMap dead_squares(const Grid& grid);

/// True when the box on just_pushed can no longer move along either axis and
/// the cluster of boxes holding it in place has at least one box off goal.
bool is_freeze_deadlock(const Grid& grid, const State& state, Square just_pushed);

}  // namespace sokoban
