// sokoban-lab: solve, benchmark, replay and validate Sokoban levels.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sokoban/bench.hpp"
#include "sokoban/deadlock.hpp"
#include "sokoban/level_io.hpp"
#include "sokoban/replay.hpp"
#include "sokoban/search.hpp"

using namespace sokoban;

namespace {

enum Exit : int {
    kSolved = 0,
    kInputError = 1,
    kNoSolution = 2,
    kLimitExceeded = 3,
    kUsage = 64,
    kFileError = 66,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

NamedLevel pick_level(const std::string& path, int index) {
    auto levels = load_levels(path);
    if (levels.empty()) throw SokobanError(ErrorCode::EmptyLevel, "no level in " + path);
    if (index < 1 || static_cast<std::size_t>(index) > levels.size())
        throw UsageError("--level " + std::to_string(index) + " out of range (file has " +
                         std::to_string(levels.size()) + ")");
    if (levels.size() > 1 && index == 1)
        std::cerr << "note: " << path << " holds " << levels.size() << " levels, using the first\n";
    return std::move(levels[index - 1]);
}

std::optional<double> default_time_limit() {
    if (const char* env = std::getenv("SOKOBAN_LAB_TIME_LIMIT")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable SOKOBAN_LAB_TIME_LIMIT='" << env << "'\n";
        }
    }
    return StrategyConfig::kDefaultTimeLimitSeconds;
}

struct SolveOptions {
    std::string strategy = "bfs";
    std::string heuristic = "prepaired";
    bool no_pruning = false;
    std::optional<std::uint64_t> node_limit;
    std::optional<double> time_limit;

    StrategyConfig config() const {
        StrategyConfig c;
        auto kind = parse_strategy_kind(strategy);
        if (!kind) throw UsageError("unknown strategy '" + strategy + "'");
        auto h = parse_heuristic_kind(heuristic);
        if (!h) throw UsageError("unknown heuristic '" + heuristic + "'");
        c.kind = *kind;
        c.heuristic = *h;
        c.pruning = !no_pruning;
        if (node_limit) c.node_limit = *node_limit;
        c.time_limit_seconds = time_limit ? time_limit : default_time_limit();
        return c;
    }
};

void add_solve_flags(CLI::App* cmd, SolveOptions& o, bool with_strategy) {
    if (with_strategy)
        cmd->add_option("--strategy", o.strategy, "dfs|bfs|df-astar|bf-astar|idastar")->required();
    cmd->add_option("--heuristic", o.heuristic, "prepaired|nearest");
    cmd->add_flag("--no-pruning", o.no_pruning, "disable deadlock pruning");
    cmd->add_option("--node-limit", o.node_limit, "maximum expanded nodes");
    cmd->add_option("--time-limit", o.time_limit, "seconds");
}

void print_metrics(const StrategyConfig& config, const Metrics& m) {
    std::cout << "strategy: " << config.label() << '\n';
    std::cout << "outcome: " << to_string(m.outcome) << '\n';
    if (m.solution_steps) std::cout << "steps: " << *m.solution_steps << '\n';
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.2f", m.elapsed_seconds);
    std::cout << "elapsed: " << elapsed << " s\n";
    std::cout << "nodes expanded: " << m.nodes_expanded << '\n';
    std::cout << "frontier peak: " << m.frontier_peak << '\n';
}

int outcome_exit(Outcome o) {
    switch (o) {
        case Outcome::Solved: return kSolved;
        case Outcome::NoSolution: return kNoSolution;
        case Outcome::LimitExceeded: return kLimitExceeded;
    }
    return kInputError;
}

int run_solve(const std::string& file, int level, const SolveOptions& opts, bool lurd) {
    StrategyConfig config = opts.config();
    NamedLevel named = pick_level(file, level);
    SolveResult result = solve(named.grid, config);
    const Metrics& m = result.metrics;
    switch (m.outcome) {
        case Outcome::Solved: std::cout << "Solved in " << *m.solution_steps << " push(es)\n"; break;
        case Outcome::NoSolution: std::cout << "No solution\n"; break;
        case Outcome::LimitExceeded: std::cout << "Limit exceeded\n"; break;
    }
    print_metrics(config, m);
    if (lurd && result.solution) std::cout << "lurd: " << pushes_to_moves(named.grid, *result.solution) << '\n';
    return outcome_exit(m.outcome);
}

std::vector<StrategyConfig> parse_strategy_list(const std::string& list, const SolveOptions& base) {
    std::vector<StrategyConfig> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        auto comma = list.find(',', start);
        std::string item = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty()) {
            // "bf-astar:nearest" overrides the heuristic for one entry.
            SolveOptions o = base;
            auto colon = item.find(':');
            o.strategy = item.substr(0, colon);
            if (colon != std::string::npos) o.heuristic = item.substr(colon + 1);
            out.push_back(o.config());
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw UsageError("--strategies is empty");
    return out;
}

int run_bench(const std::string& path, const std::string& strategies, const SolveOptions& base,
              const std::string& format, unsigned workers) {
    TableStyle style;
    if (format == "markdown") style = TableStyle::Markdown;
    else if (format == "csv") style = TableStyle::Csv;
    else throw UsageError("unknown format '" + format + "'");
    auto configs = parse_strategy_list(strategies, base);
    auto levels = load_levels(path);
    if (levels.empty()) throw SokobanError(ErrorCode::EmptyLevel, "no level in " + path);
    std::cout << format_table(run_matrix(levels, configs, workers), style);
    return 0;
}

int run_replay(const std::string& file, int level, const std::string& lurd_string,
               const std::optional<std::string>& from_solve, SolveOptions opts, int delay_ms, bool print_lurd) {
    NamedLevel named = pick_level(file, level);
    std::vector<std::string> frames;
    if (from_solve) {
        opts.strategy = *from_solve;
        StrategyConfig config = opts.config();
        SolveResult result = solve(named.grid, config);
        if (!result.solution) {
            std::cerr << "solver finished with " << to_string(result.metrics.outcome) << '\n';
            return outcome_exit(result.metrics.outcome);
        }
        frames = animate(named.grid, *result.solution);
        if (print_lurd) std::cout << "lurd: " << pushes_to_moves(named.grid, *result.solution) << "\n\n";
    } else {
        frames = animate_moves(named.grid, lurd_string);
        if (print_lurd) std::cout << "lurd: " << lurd_string << "\n\n";
    }
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (i > 0) {
            std::cout << '\n';
            if (delay_ms > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
        }
        std::cout << frames[i] << '\n' << std::flush;
    }
    return 0;
}

std::string plural(std::size_t n, const char* one, const char* many) {
    return std::to_string(n) + " " + (n == 1 ? one : many);
}

int run_validate(const std::string& file, int level, bool show_dead) {
    std::optional<NamedLevel> named;
    try {
        named.emplace(pick_level(file, level));
    } catch (const SokobanError& e) {
        std::cout << "Invalid: " << e.what() << '\n';
        return kInputError;
    }
    const Grid& g = named->grid;
    std::cout << "OK: " << plural(g.initial_boxes().size(), "box", "boxes") << ", "
              << plural(g.goals().size(), "goal", "goals") << ", enclosed\n";
    DeadSquareMap dead = dead_squares(g);
    std::cout << "size: " << g.width() << "x" << g.height() << '\n';
    std::cout << "dead squares: " << dead.dead().size() << '\n';
    if (dead.any_dead(g.initial_boxes())) std::cout << "warning: a box starts on a dead square\n";
    if (show_dead) {
        std::string text = render(g, g.initial_boxes(), g.initial_pusher());
        for (const Square& s : dead.dead()) {
            char& c = text[static_cast<std::size_t>(s.row) * (g.width() + 1) + s.col];
            if (c == ' ') c = 'x';
        }
        std::cout << text << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Push-based Sokoban solver and strategy benchmark"};
    app.require_subcommand(1);

    std::string file;
    int level = 1;
    SolveOptions opts;

    auto* solve_cmd = app.add_subcommand("solve", "solve one level");
    bool lurd = false;
    solve_cmd->add_option("level-file", file)->required();
    solve_cmd->add_option("--level", level, "1-based index inside a multi-level file");
    add_solve_flags(solve_cmd, opts, true);
    solve_cmd->add_flag("--lurd", lurd, "print the solution in LURD notation");

    auto* bench_cmd = app.add_subcommand("bench", "strategy x level comparison table");
    std::string strategies;
    std::string format = "markdown";
    unsigned workers = 1;
    bench_cmd->add_option("level-file-or-dir", file)->required();
    bench_cmd->add_option("--strategies", strategies, "comma list, entries like bfs or bf-astar:nearest")
        ->required();
    bench_cmd->add_option("--format", format, "markdown|csv");
    bench_cmd->add_option("--workers", workers, "concurrent solver runs");
    add_solve_flags(bench_cmd, opts, false);

    auto* replay_cmd = app.add_subcommand("replay", "print the frames of a solution");
    std::string lurd_string;
    std::optional<std::string> from_solve;
    int delay_ms = 0;
    replay_cmd->add_option("level-file", file)->required();
    replay_cmd->add_option("--level", level, "1-based index inside a multi-level file");
    auto* lurd_opt = replay_cmd->add_option("--lurd-string", lurd_string, "moves to play");
    auto* from_opt = replay_cmd->add_option("--from-solve", from_solve, "solve with this strategy first");
    lurd_opt->excludes(from_opt);
    add_solve_flags(replay_cmd, opts, false);
    replay_cmd->add_option("--delay", delay_ms, "milliseconds between frames");
    bool replay_lurd = false;
    replay_cmd->add_flag("--lurd", replay_lurd, "print the move string before the frames");

    auto* validate_cmd = app.add_subcommand("validate", "check a level");
    bool show_dead = false;
    validate_cmd->add_option("level-file", file)->required();
    validate_cmd->add_option("--level", level, "1-based index inside a multi-level file");
    validate_cmd->add_flag("--show-dead", show_dead, "mark dead squares with x");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*solve_cmd) return run_solve(file, level, opts, lurd);
        if (*bench_cmd) return run_bench(file, strategies, opts, format, workers);
        if (*replay_cmd) {
            if (lurd_opt->count() == 0 && !from_solve) throw UsageError("need --lurd-string or --from-solve");
            return run_replay(file, level, lurd_string, from_solve, opts, delay_ms, replay_lurd);
        }
        if (*validate_cmd) return run_validate(file, level, show_dead);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const FileError& e) {
        std::cerr << "file error: " << e.what() << '\n';
        return kFileError;
    } catch (const SokobanError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kUsage;
}
