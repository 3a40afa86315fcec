#include "sokoban/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sokoban {

std::vector<BenchRecord> run_matrix(const std::vector<NamedLevel>& levels,
                                    const std::vector<StrategyConfig>& strategies, unsigned workers) {
    if (levels.empty()) throw std::invalid_argument("run_matrix: no levels");
    if (strategies.empty()) throw std::invalid_argument("run_matrix: no strategies");

    const std::size_t cells = levels.size() * strategies.size();
    std::vector<std::optional<BenchRecord>> slots(cells);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells;) {
            const NamedLevel& level = levels[i / strategies.size()];
            const StrategyConfig& config = strategies[i % strategies.size()];
            slots[i] = BenchRecord{level.id, config, solve(level.grid, config).metrics};
        }
    };

    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(cells));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    std::vector<BenchRecord> out;
    out.reserve(cells);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

namespace {

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::vector<std::string> row_cells(const BenchRecord& r) {
    const Metrics& m = r.metrics;
    std::string steps = m.outcome == Outcome::Solved && m.solution_steps ? std::to_string(*m.solution_steps) : "-";
    return {r.strategy.label(), steps, fixed2(m.elapsed_seconds), std::to_string(m.nodes_expanded)};
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::string format_table(const std::vector<BenchRecord>& records, TableStyle style) {
    std::vector<std::string> level_order;
    for (const auto& r : records)
        if (std::find(level_order.begin(), level_order.end(), r.level_id) == level_order.end())
            level_order.push_back(r.level_id);

    std::ostringstream out;
    for (std::size_t li = 0; li < level_order.size(); ++li) {
        const std::string& level = level_order[li];
        if (li > 0) out << '\n';
        if (style == TableStyle::Markdown) {
            out << "### " << level << "\n\n|";
            for (auto h : kTableHeader) out << ' ' << h << " |";
            out << "\n|---|---:|---:|---:|\n";
        } else {
            if (level_order.size() > 1) out << "# level: " << level << '\n';
            for (std::size_t i = 0; i < std::size(kTableHeader); ++i) out << (i ? "," : "") << kTableHeader[i];
            out << '\n';
        }
        for (const auto& r : records) {
            if (r.level_id != level) continue;
            auto cells = row_cells(r);
            if (style == TableStyle::Markdown) {
                out << '|';
                for (const auto& c : cells) out << ' ' << c << " |";
            } else {
                for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
            }
            out << '\n';
        }
    }
    return out.str();
}

std::vector<TableRow> parse_csv_table(std::string_view text) {
    std::vector<TableRow> out;
    std::string level;
    std::istringstream in{std::string(text)};
    std::string line;
    constexpr std::string_view kLevelTag = "# level: ";
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.starts_with(kLevelTag)) {
            level = line.substr(kLevelTag.size());
            continue;
        }
        auto cells = split(line, ',');
        if (cells.size() != std::size(kTableHeader))
            throw std::invalid_argument("malformed CSV row: " + line);
        if (cells[0] == kTableHeader[0]) continue;
        TableRow row;
        row.level_id = level;
        row.strategy = cells[0];
        if (cells[1] != "-") row.steps = std::stoul(cells[1]);
        row.elapsed_seconds = std::stod(cells[2]);
        row.nodes_expanded = std::stoull(cells[3]);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace sokoban
