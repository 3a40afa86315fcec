#include "sokoban/state.hpp"

#include <algorithm>

namespace sokoban {

namespace {

// Flood fill into `seen` (indexed by cell); returns the visited squares in
// discovery order.
std::vector<Square> flood(const Grid& grid, const BoxSet& boxes, Square from, std::vector<bool>& seen) {
    std::vector<bool> blocked(grid.cell_count(), false);
    for (const Square& b : boxes) blocked[grid.index(b)] = true;

    std::vector<Square> out{from};
    seen[grid.index(from)] = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (Direction d : kDirections) {
            Square n = out[head] + d;
            if (grid.is_wall(n)) continue;
            std::size_t i = grid.index(n);
            if (blocked[i] || seen[i]) continue;
            seen[i] = true;
            out.push_back(n);
        }
    }
    return out;
}

void check_start(const Grid& grid, const BoxSet& boxes, Square from) {
    if (!grid.in_bounds(from) || grid.is_wall(from) || boxes.contains(from))
        throw SokobanError(ErrorCode::IllegalStart, "pusher cannot stand on " + to_string(from));
}

}  // namespace

std::size_t StateKeyHash::operator()(const StateKey& key) const noexcept {
    // FNV-1a over the cell indices.
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t c : key.cells) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::vector<Square> reachable_region(const Grid& grid, const BoxSet& boxes, Square from) {
    check_start(grid, boxes, from);
    std::vector<bool> seen(grid.cell_count(), false);
    auto region = flood(grid, boxes, from, seen);
    std::sort(region.begin(), region.end());
    return region;
}

State make_state(const Grid& grid, BoxSet boxes, Square pusher) {
    check_start(grid, boxes, pusher);
    std::vector<bool> seen(grid.cell_count(), false);
    auto region = flood(grid, boxes, pusher, seen);
    Square norm = *std::min_element(region.begin(), region.end());
    return State{std::move(boxes), norm};
}

State initial_state(const Grid& grid) {
    return make_state(grid, grid.initial_boxes(), grid.initial_pusher());
}

std::vector<Step> legal_pushes(const Grid& grid, const State& state) {
    std::vector<bool> seen(grid.cell_count(), false);
    flood(grid, state.boxes, state.pusher_norm, seen);

    std::vector<Step> out;
    for (const Square& b : state.boxes) {
        for (Direction d : kDirections) {
            Square stand = b - d;
            Square dest = b + d;
            if (!grid.in_bounds(stand) || !seen[grid.index(stand)]) continue;
            if (grid.is_wall(dest) || state.boxes.contains(dest)) continue;
            out.push_back(Step{0, b, d});
        }
    }
    return out;
}

State apply_push(const Grid& grid, const State& state, const Step& step) {
    auto legal = legal_pushes(grid, state);
    bool ok = std::any_of(legal.begin(), legal.end(), [&](const Step& s) { return s.same_push(step); });
    if (!ok) {
        throw SokobanError(ErrorCode::IllegalPush,
                           "box " + to_string(step.box_from) + " cannot be pushed " +
                               std::string(1, push_letter(step.dir)));
    }
    return push_successor(grid, state, step);
}

State push_successor(const Grid& grid, const State& state, const Step& step) {
    return make_state(grid, state.boxes.moved(step.box_from, step.box_to()), step.box_from);
}

bool is_goal_state(const Grid& grid, const State& state) {
    // Both lists are row-major and equally sized.
    return std::equal(state.boxes.begin(), state.boxes.end(), grid.goals().begin(), grid.goals().end());
}

StateKey state_key(const Grid& grid, const State& state) {
    StateKey key;
    key.cells.reserve(state.boxes.size() + 1);
    for (const Square& b : state.boxes) key.cells.push_back(static_cast<std::uint32_t>(grid.index(b)));
    key.cells.push_back(static_cast<std::uint32_t>(grid.index(state.pusher_norm)));
    return key;
}

}  // namespace sokoban
