#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sokoban/board.hpp"

namespace sokoban {

class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NamedLevel {
    std::string id;
    Grid grid;
};

struct LevelText {
    std::string title;
    std::string text;
};

/// Splits a multi-level archive on blank lines. A level row is any line whose
/// first non-indent character is '#'. Other lines (titles, comments) are
/// dropped; the first such line of a block becomes its title.
std::vector<LevelText> split_archive(std::string_view archive);

std::string read_file(const std::filesystem::path& path);

/// Loads every level of a file, or of every .xsb/.sok/.txt file in a
/// directory (sorted by name). Ids are "<stem>" for single-level files and
/// "<stem>#<n>" (1-based) otherwise.
std::vector<NamedLevel> load_levels(const std::filesystem::path& path);

}  // namespace sokoban
