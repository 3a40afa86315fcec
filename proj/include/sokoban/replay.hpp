#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sokoban/board.hpp"
#include "sokoban/search.hpp"

namespace sokoban {

struct Validation {
    bool valid = false;
    /// Ordinal of the first illegal Step; empty when every step was legal.
    std::optional<std::size_t> failed_step;
    std::string detail;

    explicit operator bool() const { return valid; }
};

/// Replays the solution's steps from the initial state. Throws GridMismatch
/// when the solution belongs to another grid.
Validation validate_solution(const Grid& grid, const Solution& solution);

/// Expands pushes into LURD moves. Walks are shortest paths; at each walking
/// step the first direction in Up, Right, Down, Left order that stays on a
/// shortest path is taken.
std::string pushes_to_moves(const Grid& grid, const Solution& solution);

/// Placement of boxes and pusher after some number of single moves.
struct Placement {
    BoxSet boxes;
    Square pusher;

    friend bool operator==(const Placement&, const Placement&) = default;
};

/// Applies LURD moves one by one. Letter case is checked against what the
/// move actually does. Throws InvalidSolution on an illegal or mislabelled move.
std::vector<Placement> play_moves(const Grid& grid, std::string_view lurd);

/// One rendered frame per move, preceded by the initial placement.
std::vector<std::string> animate(const Grid& grid, const Solution& solution);

/// Frames for an arbitrary LURD string.
std::vector<std::string> animate_moves(const Grid& grid, std::string_view lurd);

}  // namespace sokoban
