#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sokoban/level_io.hpp"
#include "sokoban/search.hpp"

namespace sokoban {

struct BenchRecord {
    std::string level_id;
    StrategyConfig strategy;
    Metrics metrics;
};

/// Solves every (level, strategy) cell. Records come back level-major in the
/// given strategy order no matter how many workers ran them. Throws
/// std::invalid_argument on an empty level or strategy list.
std::vector<BenchRecord> run_matrix(const std::vector<NamedLevel>& levels,
                                    const std::vector<StrategyConfig>& strategies,
                                    unsigned workers = 1);

enum class TableStyle { Markdown, Csv };

inline constexpr std::string_view kTableHeader[] = {"AI Strategy", "Solution Steps (#)", "Elapsed Time (s)",
                                                    "Nodes Expanded"};

// One table per level, in order of first appearance. Markdown tables get a
// "### <level>" heading; CSV tables get a "# level: <level>" line only when
// more than one level is present.
std::string format_table(const std::vector<BenchRecord>& records, TableStyle style);

/// A table row as read back from CSV.
struct TableRow {
    std::string level_id;
    std::string strategy;
    std::optional<std::size_t> steps;
    double elapsed_seconds = 0.0;
    std::uint64_t nodes_expanded = 0;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

std::vector<TableRow> parse_csv_table(std::string_view text);

}  // namespace sokoban
