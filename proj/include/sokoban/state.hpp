#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "sokoban/board.hpp"

namespace sokoban {

/// One push: the box on box_from moves one square in dir, the pusher ends on box_from.
struct Step {
    std::size_t id = 0;
    Square box_from;
    Direction dir = Direction::Up;

    Square box_to() const { return box_from + dir; }
    Square pusher_from() const { return box_from - dir; }

    /// Two steps are the same push regardless of their ordinal.
    bool same_push(const Step& other) const { return box_from == other.box_from && dir == other.dir; }
};

// Search node between pushes. The pusher is stored as the row-major minimum
// of the region it can walk to, so states differing only by walking collapse.
struct State {
    BoxSet boxes;
    Square pusher_norm;

    friend bool operator==(const State&, const State&) = default;
};

struct StateKey {
    std::vector<std::uint32_t> cells;

    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& key) const noexcept;
};

/// Squares 4-connected to `from` through non-blocking tiles, in row-major order.
std::vector<Square> reachable_region(const Grid& grid, const BoxSet& boxes, Square from);

/// State for the given box set with the pusher standing on `pusher`.
State make_state(const Grid& grid, BoxSet boxes, Square pusher);

State initial_state(const Grid& grid);

std::vector<Step> legal_pushes(const Grid& grid, const State& state);

/// Checked push; throws IllegalPush unless step is in legal_pushes(grid, state).
State apply_push(const Grid& grid, const State& state, const Step& step);

/// Unchecked push for callers that took `step` from legal_pushes.
State push_successor(const Grid& grid, const State& state, const Step& step);

bool is_goal_state(const Grid& grid, const State& state);

StateKey state_key(const Grid& grid, const State& state);

}  // namespace sokoban
