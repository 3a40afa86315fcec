// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"
#include "sokoban/bench.hpp"
#include "sokoban/deadlock.hpp"
#include "sokoban/heuristic.hpp"
#include "sokoban/replay.hpp"
#include "sokoban/search.hpp"

using namespace sokoban;

namespace {

constexpr StrategyKind kAllKinds[] = {StrategyKind::DFS, StrategyKind::BFS, StrategyKind::DF_ASTAR,
                                      StrategyKind::BF_ASTAR, StrategyKind::IDASTAR};

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", n, what.c_str(), detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

StrategyConfig config_for(StrategyKind kind, HeuristicKind h = HeuristicKind::PrePaired, bool pruning = true) {
    StrategyConfig c;
    c.kind = kind;
    c.heuristic = h;
    c.pruning = pruning;
    return c;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::vector<NamedLevel> full_corpus() {
    auto levels = corpus::micro_levels();
    levels.push_back(corpus::four_box_level());
    return levels;
}

struct Space {
    const NamedLevel* level;
    oracle::Exhaustive truth;
};

void oracle_optimality(const std::vector<NamedLevel>& micro, std::vector<Space>& spaces) {
    auto t0 = std::chrono::steady_clock::now();
    int checked = 0;
    bool ok = true;
    std::string first_bad;
    for (const auto& level : micro) {
        auto truth = oracle::enumerate(level.grid);
        bool small = !truth.truncated && truth.push_states.size() <= 10'000 && level.grid.goals().size() <= 3;
        if (!small) continue;
        auto bfs = solve(level.grid, config_for(StrategyKind::BFS));
        std::optional<std::size_t> expected;
        if (truth.min_pushes) expected = static_cast<std::size_t>(*truth.min_pushes);
        bool same = bfs.metrics.solution_steps == expected &&
                    (bfs.metrics.outcome == Outcome::Solved) == expected.has_value();
        if (!same && first_bad.empty()) first_bad = level.id;
        ok = ok && same;
        ++checked;
        spaces.push_back({&level, std::move(truth)});
    }
    double secs = seconds_since(t0);
    ok = ok && checked >= 20 && secs < 10.0;
    report(1, ok, "BFS push counts equal brute-force minimum",
           std::to_string(checked) + " levels, " + fmt("%.2f s", secs) +
               (first_bad.empty() ? "" : ", mismatch on " + first_bad));
}

void admissible_astar(const std::vector<NamedLevel>& levels) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string first_bad;
    for (const auto& level : levels) {
        auto bfs = solve(level.grid, config_for(StrategyKind::BFS)).metrics;
        for (StrategyKind k : {StrategyKind::BF_ASTAR, StrategyKind::IDASTAR}) {
            auto m = solve(level.grid, config_for(k, HeuristicKind::NearestGoal)).metrics;
            bool same = m.outcome == bfs.outcome && m.solution_steps == bfs.solution_steps;
            if (!same && first_bad.empty()) first_bad = level.id + " " + std::string(table_name(k));
            ok = ok && same;
        }
    }
    double secs = seconds_since(t0);
    ok = ok && secs < 10.0;
    report(2, ok, "BF_AStar and IDAStar with nearest-goal match BFS",
           std::to_string(levels.size()) + " levels, " + fmt("%.2f s", secs) +
               (first_bad.empty() ? "" : ", mismatch on " + first_bad));
}

void pruning_soundness(const std::vector<NamedLevel>& levels) {
    bool ok = true;
    std::string first_bad;
    for (const auto& level : levels) {
        auto on = solve(level.grid, config_for(StrategyKind::BFS, HeuristicKind::PrePaired, true)).metrics;
        auto off = solve(level.grid, config_for(StrategyKind::BFS, HeuristicKind::PrePaired, false)).metrics;
        bool same = on.outcome == off.outcome && on.solution_steps == off.solution_steps &&
                    on.outcome != Outcome::LimitExceeded;
        if (!same && first_bad.empty()) first_bad = level.id;
        ok = ok && same;
    }
    report(3, ok, "BFS with and without pruning agree",
           std::to_string(levels.size()) + " levels" + (first_bad.empty() ? "" : ", mismatch on " + first_bad));
}

void dead_square_equivalence(const std::vector<NamedLevel>& levels) {
    bool ok = true;
    std::size_t squares = 0;
    std::string first_bad;
    for (const auto& level : levels) {
        const Grid& g = level.grid;
        DeadSquareMap dead = dead_squares(g);
        for (int r = 0; r < g.height(); ++r) {
            for (int c = 0; c < g.width(); ++c) {
                Square s{r, c};
                if (g.is_wall(s)) continue;
                ++squares;
                if (dead.is_live(s) != oracle::single_box_solvable_free_pusher(g, s)) {
                    ok = false;
                    if (first_bad.empty()) first_bad = level.id + " " + to_string(s);
                }
            }
        }
    }
    report(4, ok, "dead squares equal single-box brute force",
           std::to_string(squares) + " floor squares" + (first_bad.empty() ? "" : ", mismatch at " + first_bad));
}

void solution_validity(const std::vector<NamedLevel>& levels) {
    bool ok = true;
    std::size_t solved = 0;
    std::string first_bad;
    for (const auto& level : levels) {
        for (StrategyKind k : kAllKinds) {
            std::vector<HeuristicKind> hs{HeuristicKind::PrePaired};
            if (is_informed(k)) hs.push_back(HeuristicKind::NearestGoal);
            for (HeuristicKind h : hs) {
                StrategyConfig c = config_for(k, h);
                auto r = solve(level.grid, c);
                if (r.metrics.outcome != Outcome::Solved) continue;
                ++solved;
                bool good = r.solution && validate_solution(level.grid, *r.solution);
                if (good) {
                    std::string lurd = pushes_to_moves(level.grid, *r.solution);
                    auto boxes = oracle::play(level.grid, lurd);
                    auto upper = std::count_if(lurd.begin(), lurd.end(), [](char ch) { return std::isupper(ch); });
                    good = boxes && oracle::solved(level.grid, *boxes) &&
                           static_cast<std::size_t>(upper) == r.solution->steps.size();
                }
                if (!good && first_bad.empty()) first_bad = level.id + " " + c.label();
                ok = ok && good;
            }
        }
    }
    report(5, ok, "every solution validates and its LURD replays to goal",
           std::to_string(solved) + " solutions" + (first_bad.empty() ? "" : ", bad: " + first_bad));
}

void determinism(const std::vector<NamedLevel>& levels) {
    std::vector<StrategyConfig> configs;
    for (StrategyKind k : kAllKinds) {
        configs.push_back(config_for(k));
        if (is_informed(k)) configs.push_back(config_for(k, HeuristicKind::NearestGoal));
    }
    auto a = run_matrix(levels, configs, 4);
    auto b = run_matrix(levels, configs, 1);
    bool ok = a.size() == b.size();
    for (std::size_t i = 0; ok && i < a.size(); ++i) {
        ok = a[i].level_id == b[i].level_id && a[i].metrics.solution_steps == b[i].metrics.solution_steps &&
             a[i].metrics.nodes_expanded == b[i].metrics.nodes_expanded;
    }
    report(6, ok, "two bench runs give identical steps and nodes", std::to_string(a.size()) + " cells");
}

void table_reproduction() {
    NamedLevel level = corpus::four_box_level();
    std::ostringstream detail;
    detail << level.id << ":";
    Metrics m[5];
    bool all_solved = true;
    for (int i = 0; i < 5; ++i) {
        m[i] = solve(level.grid, config_for(kAllKinds[i])).metrics;
        all_solved = all_solved && m[i].outcome == Outcome::Solved;
        detail << " " << table_name(kAllKinds[i]) << "=";
        if (m[i].solution_steps) detail << *m[i].solution_steps;
        else detail << "-";
        detail << "/" << m[i].nodes_expanded;
    }
    const Metrics& dfs = m[0];
    const Metrics& bfs = m[1];
    auto optimum = solve(level.grid, config_for(StrategyKind::BF_ASTAR, HeuristicKind::NearestGoal)).metrics;

    bool ok = all_solved && level.grid.goals().size() == 4 && bfs.solution_steps == optimum.solution_steps;
    for (int i = 0; i < 5; ++i)
        if (i != 1) ok = ok && m[i].nodes_expanded < bfs.nodes_expanded;
    ok = ok && *dfs.solution_steps > *bfs.solution_steps;
    ok = ok && m[2].nodes_expanded < bfs.nodes_expanded && m[3].nodes_expanded < bfs.nodes_expanded;
    report(7, ok, "four-box level: BFS optimal but most nodes, DFS longer, A* fewer nodes", detail.str());
}

void heuristic_properties(const std::vector<Space>& spaces) {
    bool ok = true;
    std::size_t states = 0;
    std::string first_bad;
    for (const auto& space : spaces) {
        const Grid& g = space.level->grid;
        for (const auto& raw : space.truth.push_states) {
            State s = make_state(g, BoxSet(raw.boxes), raw.pusher);
            ++states;
            int near = h_nearest_goal(g, s);
            int pre = h_prepaired(g, s);
            bool good = near <= pre;
            if (is_goal_state(g, s)) good = good && near == 0 && pre == 0;
            for (const Step& step : legal_pushes(g, s))
                good = good && near <= 1 + h_nearest_goal(g, apply_push(g, s, step));
            if (!good && first_bad.empty()) first_bad = space.level->id;
            ok = ok && good;
        }
    }
    report(8, ok, "h(goal)=0, nearest <= pre-paired, nearest is consistent",
           std::to_string(states) + " states" + (first_bad.empty() ? "" : ", violated on " + first_bad));
}

}  // namespace

int main() {
    try {
        auto micro = corpus::micro_levels();
        auto levels = full_corpus();
        std::vector<Space> spaces;
        oracle_optimality(micro, spaces);
        admissible_astar(levels);
        pruning_soundness(levels);
        dead_square_equivalence(levels);
        solution_validity(levels);
        determinism(levels);
        table_reproduction();
        heuristic_properties(spaces);
    } catch (const std::exception& e) {
        std::printf("[FAIL] acceptance aborted: %s\n", e.what());
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
