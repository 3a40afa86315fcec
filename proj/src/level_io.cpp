#include "sokoban/level_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sokoban {

namespace {

// Rows start with a wall after optional indentation. Any other characters are
// left for parse_level to reject.
bool is_level_row(std::string_view line) {
    auto first = line.find_first_not_of(" -");
    return first != std::string_view::npos && line[first] == '#';
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t;");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<LevelText> split_archive(std::string_view archive) {
    std::vector<LevelText> out;
    LevelText current;
    std::string first_other;
    auto flush = [&] {
        if (!current.text.empty()) {
            current.title = first_other;
            out.push_back(std::move(current));
        }
        current = {};
        first_other.clear();
    };

    std::istringstream in{std::string(archive)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line)) {
            flush();
        } else if (is_level_row(line)) {
            current.text += line;
            current.text += '\n';
        } else if (first_other.empty()) {
            first_other = trim(line);
        }
    }
    flush();
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw FileError("cannot read " + path.string());
    return buf.str();
}

std::vector<NamedLevel> load_levels(const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    std::error_code ec;
    std::vector<fs::path> files;
    if (fs::is_directory(path, ec)) {
        for (const auto& entry : fs::directory_iterator(path, ec)) {
            auto ext = entry.path().extension().string();
            if (entry.is_regular_file() && (ext == ".xsb" || ext == ".sok" || ext == ".txt"))
                files.push_back(entry.path());
        }
        if (ec) throw FileError("cannot list " + path.string());
        std::sort(files.begin(), files.end());
    } else if (fs::exists(path, ec)) {
        files.push_back(path);
    } else {
        throw FileError("no such file: " + path.string());
    }

    std::vector<NamedLevel> out;
    for (const auto& file : files) {
        auto blocks = split_archive(read_file(file));
        std::string stem = file.stem().string();
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            std::string id = blocks.size() == 1 ? stem : stem + "#" + std::to_string(i + 1);
            out.push_back({std::move(id), parse_level(blocks[i].text)});
        }
    }
    return out;
}

}  // namespace sokoban
