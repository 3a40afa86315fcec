#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sokoban/board.hpp"
#include "sokoban/heuristic.hpp"
#include "sokoban/state.hpp"

namespace sokoban {

enum class StrategyKind { DFS, BFS, DF_ASTAR, BF_ASTAR, IDASTAR };

constexpr bool is_informed(StrategyKind kind) {
    return kind == StrategyKind::DF_ASTAR || kind == StrategyKind::BF_ASTAR ||
           kind == StrategyKind::IDASTAR;
}

/// "dfs", "bfs", "df-astar", "bf-astar", "idastar".
std::optional<StrategyKind> parse_strategy_kind(std::string_view name);
std::string_view cli_name(StrategyKind kind);
/// Table label: DFS, BFS, DF_AStar, BF_AStar, IDAStar.
std::string_view table_name(StrategyKind kind);

std::optional<HeuristicKind> parse_heuristic_kind(std::string_view name);

struct StrategyConfig {
    static constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;
    static constexpr double kDefaultTimeLimitSeconds = 300.0;

    StrategyKind kind = StrategyKind::BFS;
    HeuristicKind heuristic = HeuristicKind::PrePaired;
    std::optional<std::uint64_t> node_limit = kDefaultNodeLimit;
    std::optional<double> time_limit_seconds = kDefaultTimeLimitSeconds;
    bool pruning = true;

    /// Strategy column text. Informed strategies using anything other than
    /// the pre-paired estimator carry it as a suffix, e.g. "BF_AStar/nearest".
    std::string label() const;
};

enum class Outcome { Solved, NoSolution, LimitExceeded };

std::string_view to_string(Outcome outcome);

struct Metrics {
    Outcome outcome = Outcome::NoSolution;
    std::optional<std::size_t> solution_steps;
    double elapsed_seconds = 0.0;
    std::uint64_t nodes_expanded = 0;
    std::uint64_t frontier_peak = 0;
    /// A* only: closed states re-expanded after a cheaper path turned up.
    std::uint64_t reopened = 0;
};

/// A Step queue bound to the Grid it solves.
struct Solution {
    Grid grid;
    std::vector<Step> steps;
};

struct SolveResult {
    std::optional<Solution> solution;
    Metrics metrics;
};

/// Observation points for tests and tooling; not needed for normal solving.
struct SearchHooks {
    std::function<void(const State&)> on_enqueue;
};

/// Runs one strategy on the grid. Deterministic in everything except
/// elapsed_seconds.
SolveResult solve(const Grid& grid, const StrategyConfig& config, const SearchHooks& hooks = {});

}  // namespace sokoban
