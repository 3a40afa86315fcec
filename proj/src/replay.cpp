#include "sokoban/replay.hpp"

#include <deque>
#include <limits>

namespace sokoban {

Validation validate_solution(const Grid& grid, const Solution& solution) {
    if (!(solution.grid == grid)) throw SokobanError(ErrorCode::GridMismatch, "solution is bound to another grid");

    State state = initial_state(grid);
    for (std::size_t i = 0; i < solution.steps.size(); ++i) {
        try {
            state = apply_push(grid, state, solution.steps[i]);
        } catch (const SokobanError& e) {
            return {false, i, e.what()};
        }
    }
    if (!is_goal_state(grid, state)) return {false, std::nullopt, "final state leaves boxes off goals"};
    return {true, std::nullopt, {}};
}

namespace {

// Shortest walk from `from` to `to` avoiding walls and boxes.
std::string walk(const Grid& grid, const BoxSet& boxes, Square from, Square to) {
    constexpr int kUnreached = std::numeric_limits<int>::max();
    std::vector<int> dist(grid.cell_count(), kUnreached);
    std::deque<Square> queue{to};
    dist[grid.index(to)] = 0;
    while (!queue.empty()) {
        Square s = queue.front();
        queue.pop_front();
        for (Direction d : kDirections) {
            Square n = s + d;
            if (grid.is_wall(n) || boxes.contains(n) || dist[grid.index(n)] != kUnreached) continue;
            dist[grid.index(n)] = dist[grid.index(s)] + 1;
            queue.push_back(n);
        }
    }
    if (dist[grid.index(from)] == kUnreached)
        throw SokobanError(ErrorCode::InvalidSolution, "pusher cannot reach " + to_string(to));

    std::string out;
    for (Square at = from; at != to;) {
        for (Direction d : kDirections) {
            Square n = at + d;
            if (!grid.is_wall(n) && dist[grid.index(n)] == dist[grid.index(at)] - 1) {
                out.push_back(move_letter(d));
                at = n;
                break;
            }
        }
    }
    return out;
}

std::optional<Direction> letter_direction(char c) {
    switch (c) {
        case 'u': case 'U': return Direction::Up;
        case 'r': case 'R': return Direction::Right;
        case 'd': case 'D': return Direction::Down;
        case 'l': case 'L': return Direction::Left;
        default: return std::nullopt;
    }
}

void require_valid(const Grid& grid, const Solution& solution) {
    auto v = validate_solution(grid, solution);
    if (!v) throw SokobanError(ErrorCode::InvalidSolution, v.detail);
}

}  // namespace

std::string pushes_to_moves(const Grid& grid, const Solution& solution) {
    require_valid(grid, solution);
    BoxSet boxes = grid.initial_boxes();
    Square pusher = grid.initial_pusher();
    std::string out;
    for (const Step& step : solution.steps) {
        out += walk(grid, boxes, pusher, step.pusher_from());
        out.push_back(push_letter(step.dir));
        boxes = boxes.moved(step.box_from, step.box_to());
        pusher = step.box_from;
    }
    return out;
}

std::vector<Placement> play_moves(const Grid& grid, std::string_view lurd) {
    std::vector<Placement> out{{grid.initial_boxes(), grid.initial_pusher()}};
    for (std::size_t i = 0; i < lurd.size(); ++i) {
        auto dir = letter_direction(lurd[i]);
        auto fail = [&](const std::string& why) {
            return SokobanError(ErrorCode::InvalidSolution, "move " + std::to_string(i) + " '" +
                                                                std::string(1, lurd[i]) + "': " + why);
        };
        if (!dir) throw fail("not a LURD letter");
        const Placement& cur = out.back();
        Square next = cur.pusher + *dir;
        if (grid.is_wall(next)) throw fail("walks into a wall");
        bool pushes = cur.boxes.contains(next);
        bool upper = lurd[i] >= 'A' && lurd[i] <= 'Z';
        if (pushes != upper) throw fail(pushes ? "pushes a box but is lowercase" : "uppercase without a box");
        if (pushes) {
            Square dest = next + *dir;
            if (grid.is_wall(dest) || cur.boxes.contains(dest)) throw fail("box is blocked");
            out.push_back({cur.boxes.moved(next, dest), next});
        } else {
            out.push_back({cur.boxes, next});
        }
    }
    return out;
}

std::vector<std::string> animate_moves(const Grid& grid, std::string_view lurd) {
    std::vector<std::string> frames;
    for (const Placement& p : play_moves(grid, lurd)) frames.push_back(render(grid, p.boxes, p.pusher));
    return frames;
}

std::vector<std::string> animate(const Grid& grid, const Solution& solution) {
    return animate_moves(grid, pushes_to_moves(grid, solution));
}

}  // namespace sokoban
