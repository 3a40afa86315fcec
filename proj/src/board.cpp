#include "sokoban/board.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace sokoban {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyLevel: return "EmptyLevel";
        case ErrorCode::InvalidCharacter: return "InvalidCharacter";
        case ErrorCode::NoPusher: return "NoPusher";
        case ErrorCode::MultiplePushers: return "MultiplePushers";
        case ErrorCode::NoBoxes: return "NoBoxes";
        case ErrorCode::BoxGoalCountMismatch: return "BoxGoalCountMismatch";
        case ErrorCode::UnenclosedPlayfield: return "UnenclosedPlayfield";
        case ErrorCode::OutOfBounds: return "OutOfBounds";
        case ErrorCode::IllegalPlacement: return "IllegalPlacement";
        case ErrorCode::IllegalStart: return "IllegalStart";
        case ErrorCode::IllegalPush: return "IllegalPush";
        case ErrorCode::BoxNotPresent: return "BoxNotPresent";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::InvalidSolution: return "InvalidSolution";
    }
    return "Unknown";
}

char move_letter(Direction d) {
    constexpr char letters[] = {'u', 'r', 'd', 'l'};
    return letters[static_cast<int>(d)];
}

char push_letter(Direction d) {
    constexpr char letters[] = {'U', 'R', 'D', 'L'};
    return letters[static_cast<int>(d)];
}

std::string to_string(Square s) {
    return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")";
}

BoxSet::BoxSet(std::vector<Square> squares) : squares_(std::move(squares)) {
    std::sort(squares_.begin(), squares_.end());
    squares_.erase(std::unique(squares_.begin(), squares_.end()), squares_.end());
}

bool BoxSet::contains(Square s) const {
    return std::binary_search(squares_.begin(), squares_.end(), s);
}

BoxSet BoxSet::moved(Square from, Square to) const {
    BoxSet out;
    out.squares_.reserve(squares_.size());
    bool placed = false;
    for (const Square& s : squares_) {
        if (s == from) continue;
        if (!placed && to < s) {
            out.squares_.push_back(to);
            placed = true;
        }
        out.squares_.push_back(s);
    }
    if (!placed) out.squares_.push_back(to);
    return out;
}

namespace {

void require(bool ok, ErrorCode code, const std::string& detail) {
    if (!ok) throw SokobanError(code, detail);
}

}  // namespace

Grid::Grid(int width, int height, std::vector<Square> walls, std::vector<Square> goals,
           std::vector<Square> initial_boxes, Square initial_pusher)
    : width_(width),
      height_(height),
      walls_(static_cast<std::size_t>(std::max(width, 0)) * std::max(height, 0), false),
      goal_flags_(walls_.size(), false),
      initial_boxes_(initial_boxes),
      initial_pusher_(initial_pusher) {
    require(width > 0 && height > 0, ErrorCode::EmptyLevel, "grid has no squares");
    require(initial_boxes_.size() == initial_boxes.size(), ErrorCode::IllegalPlacement,
            "duplicate box squares");
    std::sort(goals.begin(), goals.end());
    require(std::adjacent_find(goals.begin(), goals.end()) == goals.end(),
            ErrorCode::IllegalPlacement, "duplicate goal squares");
    require(initial_boxes_.size() == goals.size(), ErrorCode::BoxGoalCountMismatch,
            std::to_string(initial_boxes_.size()) + " box(es) vs " + std::to_string(goals.size()) +
                " goal(s)");
    require(!goals.empty(), ErrorCode::NoBoxes, "level has no boxes");

    for (const Square& s : walls) {
        require(in_bounds(s), ErrorCode::OutOfBounds, "wall at " + to_string(s));
        walls_[index(s)] = true;
    }
    for (const Square& s : goals) {
        require(in_bounds(s), ErrorCode::OutOfBounds, "goal at " + to_string(s));
        require(!walls_[index(s)], ErrorCode::IllegalPlacement, "goal on wall at " + to_string(s));
        goal_flags_[index(s)] = true;
    }
    goals_ = std::move(goals);
    for (const Square& s : initial_boxes_) {
        require(in_bounds(s), ErrorCode::OutOfBounds, "box at " + to_string(s));
        require(!walls_[index(s)], ErrorCode::IllegalPlacement, "box on wall at " + to_string(s));
    }
    require(in_bounds(initial_pusher_), ErrorCode::OutOfBounds, "pusher at " + to_string(initial_pusher_));
    require(!walls_[index(initial_pusher_)] && !initial_boxes_.contains(initial_pusher_),
            ErrorCode::IllegalPlacement, "pusher overlaps wall or box at " + to_string(initial_pusher_));

    // Flood fill through non-wall squares, boxes included; touching the edge
    // of the text means the pusher could walk off the level.
    std::vector<bool> seen(cell_count(), false);
    std::deque<Square> queue{initial_pusher_};
    seen[index(initial_pusher_)] = true;
    while (!queue.empty()) {
        Square s = queue.front();
        queue.pop_front();
        for (Direction d : kDirections) {
            Square n = s + d;
            require(in_bounds(n), ErrorCode::UnenclosedPlayfield,
                    "pusher can escape the level via " + to_string(s));
            if (walls_[index(n)] || seen[index(n)]) continue;
            seen[index(n)] = true;
            queue.push_back(n);
        }
    }
}

std::vector<Square> Grid::walls() const {
    std::vector<Square> out;
    for (std::size_t i = 0; i < walls_.size(); ++i)
        if (walls_[i]) out.push_back(square_at(i));
    return out;
}

Tile Grid::tile_at(const BoxSet& boxes, Square pusher, Square s) const {
    if (!in_bounds(s)) throw SokobanError(ErrorCode::OutOfBounds, to_string(s));
    if (walls_[index(s)]) return {TileKind::Rock, false};
    bool goal = goal_flags_[index(s)];
    if (boxes.contains(s)) return {TileKind::Box, goal};
    if (s == pusher) return {TileKind::Pusher, goal};
    return {TileKind::Empty, goal};
}

Grid parse_level(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    auto blank = [](std::string_view l) { return l.find_first_not_of(' ') == std::string_view::npos; };
    while (!lines.empty() && blank(lines.back())) lines.pop_back();
    while (!lines.empty() && blank(lines.front())) lines.erase(lines.begin());
    if (lines.empty()) throw SokobanError(ErrorCode::EmptyLevel, "no level rows");

    std::size_t width = 0;
    for (auto l : lines) width = std::max(width, l.size());

    std::vector<Square> walls, goals, boxes;
    std::optional<Square> pusher;
    int pushers = 0;
    for (std::size_t r = 0; r < lines.size(); ++r) {
        for (std::size_t c = 0; c < lines[r].size(); ++c) {
            Square s{static_cast<int>(r), static_cast<int>(c)};
            switch (lines[r][c]) {
                case '#': walls.push_back(s); break;
                case '@': pusher = s; ++pushers; break;
                case '+': pusher = s; ++pushers; goals.push_back(s); break;
                case '$': boxes.push_back(s); break;
                case '*': boxes.push_back(s); goals.push_back(s); break;
                case '.': goals.push_back(s); break;
                case ' ':
                case '-': break;
                default:
                    throw SokobanError(ErrorCode::InvalidCharacter,
                                       std::string("'") + lines[r][c] + "' at " + to_string(s));
            }
        }
    }
    if (pushers == 0) throw SokobanError(ErrorCode::NoPusher, "level has no pusher");
    if (pushers > 1)
        throw SokobanError(ErrorCode::MultiplePushers, std::to_string(pushers) + " pushers");
    return Grid(static_cast<int>(width), static_cast<int>(lines.size()), std::move(walls),
                std::move(goals), std::move(boxes), *pusher);
}

bool tile_blocks(const Grid& grid, const BoxSet& boxes, Square s) {
    if (!grid.in_bounds(s)) throw SokobanError(ErrorCode::OutOfBounds, to_string(s));
    return grid.is_wall(s) || boxes.contains(s);
}

std::string render(const Grid& grid, const BoxSet& boxes, Square pusher) {
    if (!grid.in_bounds(pusher) || grid.is_wall(pusher) || boxes.contains(pusher))
        throw SokobanError(ErrorCode::IllegalPlacement, "pusher at " + to_string(pusher));
    for (const Square& b : boxes)
        if (!grid.in_bounds(b) || grid.is_wall(b))
            throw SokobanError(ErrorCode::IllegalPlacement, "box at " + to_string(b));

    std::string out;
    out.reserve(grid.cell_count() + grid.height());
    for (int r = 0; r < grid.height(); ++r) {
        if (r > 0) out.push_back('\n');
        for (int c = 0; c < grid.width(); ++c) {
            Tile t = grid.tile_at(boxes, pusher, {r, c});
            switch (t.kind) {
                case TileKind::Rock: out.push_back('#'); break;
                case TileKind::Box: out.push_back(t.is_also_goal ? '*' : '$'); break;
                case TileKind::Pusher: out.push_back(t.is_also_goal ? '+' : '@'); break;
                case TileKind::Empty: out.push_back(t.is_also_goal ? '.' : ' '); break;
            }
        }
    }
    return out;
}

}  // namespace sokoban
