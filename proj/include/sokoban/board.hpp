#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "sokoban/error.hpp"

namespace sokoban {

enum class Direction : std::uint8_t { Up, Right, Down, Left };

// Successor and tie-break order used throughout the engine.
inline constexpr std::array<Direction, 4> kDirections{Direction::Up, Direction::Right,
                                                      Direction::Down, Direction::Left};

constexpr int row_delta(Direction d) {
    return d == Direction::Up ? -1 : d == Direction::Down ? 1 : 0;
}
constexpr int col_delta(Direction d) {
    return d == Direction::Left ? -1 : d == Direction::Right ? 1 : 0;
}
constexpr Direction opposite(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 2) % 4);
}

/// Lowercase LURD letter for a walk in direction d.
char move_letter(Direction d);
/// Uppercase LURD letter for a push in direction d.
char push_letter(Direction d);

// Ordering is row-major, which is the order every list of squares in the
// engine is kept in.
struct Square {
    int row = 0;
    int col = 0;

    friend constexpr auto operator<=>(const Square&, const Square&) = default;

    constexpr Square operator+(Direction d) const { return {row + row_delta(d), col + col_delta(d)}; }
    constexpr Square operator-(Direction d) const { return {row - row_delta(d), col - col_delta(d)}; }
};

constexpr int manhattan(Square a, Square b) {
    return (a.row > b.row ? a.row - b.row : b.row - a.row) +
           (a.col > b.col ? a.col - b.col : b.col - a.col);
}

std::string to_string(Square s);

/// Sorted, duplicate-free set of box squares.
class BoxSet {
public:
    BoxSet() = default;
    BoxSet(std::initializer_list<Square> squares) : BoxSet(std::vector<Square>(squares)) {}
    explicit BoxSet(std::vector<Square> squares);

    bool contains(Square s) const;
    std::size_t size() const { return squares_.size(); }
    bool empty() const { return squares_.empty(); }
    const Square& operator[](std::size_t i) const { return squares_[i]; }
    auto begin() const { return squares_.begin(); }
    auto end() const { return squares_.end(); }
    const std::vector<Square>& squares() const { return squares_; }

    /// Returns a copy with the box at `from` relocated to `to`.
    BoxSet moved(Square from, Square to) const;

    friend bool operator==(const BoxSet&, const BoxSet&) = default;
    friend auto operator<=>(const BoxSet&, const BoxSet&) = default;

private:
    std::vector<Square> squares_;
};

// The tile hierarchy collapses into an occupancy kind plus a goal overlay:
// a goal is never a tile of its own, only a flag on whatever sits there.
enum class TileKind : std::uint8_t { Empty, Rock, Box, Pusher };

struct Tile {
    TileKind kind = TileKind::Empty;
    bool is_also_goal = false;

    /// Rocks and boxes obstruct the pusher; everything else lets it through.
    constexpr bool blocks() const { return kind == TileKind::Rock || kind == TileKind::Box; }

    friend constexpr bool operator==(const Tile&, const Tile&) = default;
};

/// Immutable level geometry plus the initial placement of the movable tiles.
class Grid {
public:
    /// Validates every Grid invariant; throws SokobanError on violation.
    Grid(int width, int height, std::vector<Square> walls, std::vector<Square> goals,
         std::vector<Square> initial_boxes, Square initial_pusher);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t cell_count() const { return static_cast<std::size_t>(width_) * height_; }

    bool in_bounds(Square s) const {
        return s.row >= 0 && s.col >= 0 && s.row < height_ && s.col < width_;
    }
    std::size_t index(Square s) const { return static_cast<std::size_t>(s.row) * width_ + s.col; }
    Square square_at(std::size_t index) const {
        return {static_cast<int>(index / width_), static_cast<int>(index % width_)};
    }

    /// Out-of-bounds squares are reported as walls.
    bool is_wall(Square s) const { return !in_bounds(s) || walls_[index(s)]; }
    bool is_goal(Square s) const { return in_bounds(s) && goal_flags_[index(s)]; }

    std::vector<Square> walls() const;
    const std::vector<Square>& goals() const { return goals_; }
    const BoxSet& initial_boxes() const { return initial_boxes_; }
    Square initial_pusher() const { return initial_pusher_; }

    /// Tile for square s under the given placement of boxes and pusher.
    Tile tile_at(const BoxSet& boxes, Square pusher, Square s) const;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    int width_;
    int height_;
    std::vector<bool> walls_;
    std::vector<bool> goal_flags_;
    std::vector<Square> goals_;
    BoxSet initial_boxes_;
    Square initial_pusher_;
};

/// Parses one level in XSB notation.
Grid parse_level(std::string_view text);

/// True iff s is a wall or holds a box.
bool tile_blocks(const Grid& grid, const BoxSet& boxes, Square s);

/// XSB text for the grid with the given placement. Lines keep the full grid
/// width so that parse_level(render(...)) reproduces the geometry exactly.
std::string render(const Grid& grid, const BoxSet& boxes, Square pusher);

}  // namespace sokoban
