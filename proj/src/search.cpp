#include "sokoban/search.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "sokoban/deadlock.hpp"

namespace sokoban {

std::optional<StrategyKind> parse_strategy_kind(std::string_view name) {
    if (name == "dfs") return StrategyKind::DFS;
    if (name == "bfs") return StrategyKind::BFS;
    if (name == "df-astar") return StrategyKind::DF_ASTAR;
    if (name == "bf-astar") return StrategyKind::BF_ASTAR;
    if (name == "idastar") return StrategyKind::IDASTAR;
    return std::nullopt;
}

std::string_view cli_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::DFS: return "dfs";
        case StrategyKind::BFS: return "bfs";
        case StrategyKind::DF_ASTAR: return "df-astar";
        case StrategyKind::BF_ASTAR: return "bf-astar";
        case StrategyKind::IDASTAR: return "idastar";
    }
    return "?";
}

std::string_view table_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::DFS: return "DFS";
        case StrategyKind::BFS: return "BFS";
        case StrategyKind::DF_ASTAR: return "DF_AStar";
        case StrategyKind::BF_ASTAR: return "BF_AStar";
        case StrategyKind::IDASTAR: return "IDAStar";
    }
    return "?";
}

std::optional<HeuristicKind> parse_heuristic_kind(std::string_view name) {
    if (name == "prepaired") return HeuristicKind::PrePaired;
    if (name == "nearest") return HeuristicKind::NearestGoal;
    if (name == "zero") return HeuristicKind::Zero;
    return std::nullopt;
}

std::string StrategyConfig::label() const {
    std::string out(table_name(kind));
    if (is_informed(kind) && heuristic != HeuristicKind::PrePaired) {
        out += '/';
        out += to_string(heuristic);
    }
    return out;
}

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Solved: return "Solved";
        case Outcome::NoSolution: return "NoSolution";
        case Outcome::LimitExceeded: return "LimitExceeded";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::int64_t kNoParent = -1;

struct Node {
    State state;
    std::int64_t parent;
    Step step;
    std::uint32_t g;
};

class Searcher {
public:
    Searcher(const Grid& grid, const StrategyConfig& config, const SearchHooks& hooks)
        : grid_(grid), config_(config), hooks_(hooks), start_(Clock::now()) {
        if (config.pruning) dead_.emplace(grid);
    }

    SolveResult run() {
        State root = initial_state(grid_);
        SolveResult result;
        if (is_goal_state(grid_, root)) {
            result.solution = Solution{grid_, {}};
            metrics_.outcome = Outcome::Solved;
        } else if (dead_ && dead_->any_dead(root.boxes)) {
            metrics_.outcome = Outcome::NoSolution;
        } else {
            switch (config_.kind) {
                case StrategyKind::DFS: blind(std::move(root), /*lifo=*/true); break;
                case StrategyKind::BFS: blind(std::move(root), /*lifo=*/false); break;
                case StrategyKind::DF_ASTAR: astar(std::move(root), /*prefer_recent=*/true); break;
                case StrategyKind::BF_ASTAR: astar(std::move(root), /*prefer_recent=*/false); break;
                case StrategyKind::IDASTAR: idastar(std::move(root)); break;
            }
            if (!found_.empty() || metrics_.outcome == Outcome::Solved) {
                result.solution = Solution{grid_, std::move(found_)};
            }
        }
        if (result.solution) {
            for (std::size_t i = 0; i < result.solution->steps.size(); ++i) result.solution->steps[i].id = i;
            metrics_.outcome = Outcome::Solved;
            metrics_.solution_steps = result.solution->steps.size();
        }
        metrics_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        result.metrics = metrics_;
        return result;
    }

private:
    // Successors of `state` in push order, minus those the deadlock rules
    // reject.
    std::vector<std::pair<Step, State>> successors(const State& state) {
        std::vector<std::pair<Step, State>> out;
        for (const Step& step : legal_pushes(grid_, state)) {
            if (dead_ && dead_->is_dead(step.box_to())) continue;
            State next = push_successor(grid_, state, step);
            if (dead_ && is_freeze_deadlock(grid_, next, step.box_to())) continue;
            out.emplace_back(step, std::move(next));
        }
        return out;
    }

    // Counts one expansion; false once a limit is hit.
    bool budget() {
        if (config_.node_limit && metrics_.nodes_expanded >= *config_.node_limit) {
            metrics_.outcome = Outcome::LimitExceeded;
            return false;
        }
        if (config_.time_limit_seconds && (metrics_.nodes_expanded & 255) == 0) {
            double spent = std::chrono::duration<double>(Clock::now() - start_).count();
            if (spent > *config_.time_limit_seconds) {
                metrics_.outcome = Outcome::LimitExceeded;
                return false;
            }
        }
        ++metrics_.nodes_expanded;
        return true;
    }

    void enqueued(const State& s) {
        if (hooks_.on_enqueue) hooks_.on_enqueue(s);
    }

    void peak(std::size_t size) {
        metrics_.frontier_peak = std::max<std::uint64_t>(metrics_.frontier_peak, size);
    }

    void trace(std::int64_t node) {
        found_.clear();
        for (; nodes_[node].parent != kNoParent; node = nodes_[node].parent) found_.push_back(nodes_[node].step);
        std::reverse(found_.begin(), found_.end());
        metrics_.outcome = Outcome::Solved;
    }

    // DFS and BFS share everything but the end of the frontier they pop from.
    // States are marked visited and goal-tested when generated.
    void blind(State root, bool lifo) {
        std::unordered_set<StateKey, StateKeyHash> visited;
        visited.insert(state_key(grid_, root));
        enqueued(root);
        nodes_.push_back({std::move(root), kNoParent, {}, 0});
        std::deque<std::int64_t> frontier{0};
        peak(1);

        while (!frontier.empty()) {
            std::int64_t current;
            if (lifo) {
                current = frontier.back();
                frontier.pop_back();
            } else {
                current = frontier.front();
                frontier.pop_front();
            }
            if (!budget()) return;

            auto next = successors(nodes_[current].state);
            std::vector<std::int64_t> children;
            for (auto& [step, state] : next) {
                if (!visited.insert(state_key(grid_, state)).second) continue;
                bool goal = is_goal_state(grid_, state);
                enqueued(state);
                nodes_.push_back({std::move(state), current, step, nodes_[current].g + 1});
                std::int64_t id = static_cast<std::int64_t>(nodes_.size()) - 1;
                if (goal) {
                    trace(id);
                    return;
                }
                children.push_back(id);
            }
            if (lifo) {
                // First successor must be popped first.
                frontier.insert(frontier.end(), children.rbegin(), children.rend());
            } else {
                frontier.insert(frontier.end(), children.begin(), children.end());
            }
            peak(frontier.size());
        }
        metrics_.outcome = Outcome::NoSolution;
    }

    struct OpenEntry {
        int f;
        std::uint64_t seq;
        std::int64_t node;
    };

    struct BestEntry {
        std::uint32_t g;
        bool closed;
    };

    // Best-first on f = g + h. Equal f is broken by insertion order: newest
    // first for the depth-preferring variant, oldest first otherwise.
    void astar(State root, bool prefer_recent) {
        auto worse = [prefer_recent](const OpenEntry& a, const OpenEntry& b) {
            if (a.f != b.f) return a.f > b.f;
            return prefer_recent ? a.seq < b.seq : a.seq > b.seq;
        };
        std::priority_queue<OpenEntry, std::vector<OpenEntry>, decltype(worse)> open(worse);
        std::unordered_map<StateKey, BestEntry, StateKeyHash> best;
        std::uint64_t seq = 0;

        int h0 = estimate(config_.heuristic, grid_, root);
        best.emplace(state_key(grid_, root), BestEntry{0, false});
        enqueued(root);
        nodes_.push_back({std::move(root), kNoParent, {}, 0});
        open.push({h0, seq++, 0});
        peak(1);

        while (!open.empty()) {
            OpenEntry top = open.top();
            open.pop();
            const std::uint32_t g = nodes_[top.node].g;
            BestEntry& entry = best.at(state_key(grid_, nodes_[top.node].state));
            if (g > entry.g || entry.closed) continue;
            if (is_goal_state(grid_, nodes_[top.node].state)) {
                trace(top.node);
                return;
            }
            if (!budget()) return;
            entry.closed = true;

            auto next = successors(nodes_[top.node].state);
            for (auto& [step, state] : next) {
                StateKey key = state_key(grid_, state);
                auto it = best.find(key);
                if (it != best.end()) {
                    if (g + 1 >= it->second.g) continue;
                    if (it->second.closed) ++metrics_.reopened;
                    it->second = BestEntry{g + 1, false};
                } else {
                    best.emplace(std::move(key), BestEntry{g + 1, false});
                }
                int f = static_cast<int>(g + 1) + estimate(config_.heuristic, grid_, state);
                enqueued(state);
                nodes_.push_back({std::move(state), top.node, step, g + 1});
                open.push({f, seq++, static_cast<std::int64_t>(nodes_.size()) - 1});
            }
            peak(open.size());
        }
        metrics_.outcome = Outcome::NoSolution;
    }

    enum class Probe { Found, Exhausted, Limit };

    // Cost-bounded DFS; only states on the current path count as visited.
    Probe bounded(const State& state, std::uint32_t g, int threshold, int& next_threshold,
                  std::unordered_set<StateKey, StateKeyHash>& on_path, std::vector<Step>& path) {
        int f = static_cast<int>(g) + estimate(config_.heuristic, grid_, state);
        if (f > threshold) {
            next_threshold = std::min(next_threshold, f);
            return Probe::Exhausted;
        }
        if (is_goal_state(grid_, state)) return Probe::Found;
        if (!budget()) return Probe::Limit;
        peak(path.size() + 1);

        for (auto& [step, child] : successors(state)) {
            StateKey key = state_key(grid_, child);
            if (on_path.contains(key)) continue;
            enqueued(child);
            on_path.insert(key);
            path.push_back(step);
            Probe probe = bounded(child, g + 1, threshold, next_threshold, on_path, path);
            if (probe != Probe::Exhausted) return probe;
            path.pop_back();
            on_path.erase(key);
        }
        return Probe::Exhausted;
    }

    void idastar(State root) {
        enqueued(root);
        int threshold = estimate(config_.heuristic, grid_, root);
        for (;;) {
            std::unordered_set<StateKey, StateKeyHash> on_path{state_key(grid_, root)};
            std::vector<Step> path;
            int next_threshold = std::numeric_limits<int>::max();
            Probe probe = bounded(root, 0, threshold, next_threshold, on_path, path);
            if (probe == Probe::Found) {
                found_ = std::move(path);
                metrics_.outcome = Outcome::Solved;
                return;
            }
            if (probe == Probe::Limit) return;
            if (next_threshold == std::numeric_limits<int>::max()) {
                metrics_.outcome = Outcome::NoSolution;
                return;
            }
            threshold = next_threshold;
        }
    }

    const Grid& grid_;
    const StrategyConfig& config_;
    const SearchHooks& hooks_;
    Clock::time_point start_;
    std::optional<DeadSquareMap> dead_;
    Metrics metrics_;
    std::vector<Node> nodes_;
    std::vector<Step> found_;
};

}  // namespace

SolveResult solve(const Grid& grid, const StrategyConfig& config, const SearchHooks& hooks) {
    return Searcher(grid, config, hooks).run();
}

}  // namespace sokoban
