#include "sokoban/deadlock.hpp"

#include <algorithm>
#include <deque>

namespace sokoban {

DeadSquareMap::DeadSquareMap(const Grid& grid)
    : width_(grid.width()),
      height_(grid.height()),
      wall_(grid.cell_count(), false),
      live_(grid.cell_count(), false) {
    for (const Square& w : grid.walls()) wall_[grid.index(w)] = true;

    // Backward search: a box on b can be pulled to b+d when the pusher has
    // room to stand on b+d and step back onto b+2d.
    std::deque<Square> queue;
    for (const Square& g : grid.goals()) {
        live_[grid.index(g)] = true;
        queue.push_back(g);
    }
    while (!queue.empty()) {
        Square b = queue.front();
        queue.pop_front();
        for (Direction d : kDirections) {
            Square to = b + d;
            Square back = to + d;
            if (grid.is_wall(to) || grid.is_wall(back)) continue;
            if (live_[grid.index(to)]) continue;
            live_[grid.index(to)] = true;
            queue.push_back(to);
        }
    }
}

bool DeadSquareMap::is_dead(Square s) const {
    if (s.row < 0 || s.col < 0 || s.row >= height_ || s.col >= width_) return false;
    std::size_t i = static_cast<std::size_t>(s.row) * width_ + s.col;
    return !wall_[i] && !live_[i];
}

bool DeadSquareMap::is_live(Square s) const {
    if (s.row < 0 || s.col < 0 || s.row >= height_ || s.col >= width_) return false;
    return live_[static_cast<std::size_t>(s.row) * width_ + s.col];
}

std::vector<Square> DeadSquareMap::dead() const {
    std::vector<Square> out;
    for (int r = 0; r < height_; ++r)
        for (int c = 0; c < width_; ++c)
            if (is_dead({r, c})) out.push_back({r, c});
    return out;
}

bool DeadSquareMap::any_dead(const BoxSet& boxes) const {
    return std::any_of(boxes.begin(), boxes.end(), [this](Square b) { return is_dead(b); });
}

DeadSquareMap dead_squares(const Grid& grid) { return DeadSquareMap(grid); }

namespace {

struct FreezeCheck {
    const Grid& grid;
    const BoxSet& boxes;
    std::vector<Square> in_progress;

    bool pending(Square s) const {
        return std::find(in_progress.begin(), in_progress.end(), s) != in_progress.end();
    }

    // Boxes already under evaluation count as frozen. `cluster` only receives
    // boxes from a successful derivation.
    bool frozen(Square box, std::vector<Square>& cluster) {
        in_progress.push_back(box);
        std::vector<Square> support;
        bool result = axis_blocked(box, Direction::Left, Direction::Right, support) &&
                      axis_blocked(box, Direction::Up, Direction::Down, support);
        in_progress.pop_back();
        if (result) {
            cluster.push_back(box);
            cluster.insert(cluster.end(), support.begin(), support.end());
        }
        return result;
    }

    bool axis_blocked(Square box, Direction a, Direction b, std::vector<Square>& support) {
        for (Direction d : {a, b}) {
            Square n = box + d;
            if (grid.is_wall(n)) return true;
            if (!boxes.contains(n)) continue;
            if (pending(n)) return true;
            std::vector<Square> sub;
            if (frozen(n, sub)) {
                support.insert(support.end(), sub.begin(), sub.end());
                return true;
            }
        }
        return false;
    }
};

}  // namespace

bool is_freeze_deadlock(const Grid& grid, const State& state, Square just_pushed) {
    if (!state.boxes.contains(just_pushed))
        throw SokobanError(ErrorCode::BoxNotPresent, "no box at " + to_string(just_pushed));
    FreezeCheck check{grid, state.boxes, {}};
    std::vector<Square> cluster;
    if (!check.frozen(just_pushed, cluster)) return false;
    return std::any_of(cluster.begin(), cluster.end(), [&](Square s) { return !grid.is_goal(s); });
}

}  // namespace sokoban
