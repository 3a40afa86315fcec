#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sokoban {

enum class ErrorCode {
    EmptyLevel,
    InvalidCharacter,
    NoPusher,
    MultiplePushers,
    NoBoxes,
    BoxGoalCountMismatch,
    UnenclosedPlayfield,
    OutOfBounds,
    IllegalPlacement,
    IllegalStart,
    IllegalPush,
    BoxNotPresent,
    GridMismatch,
    InvalidSolution,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure in the library is reported through this type;
// callers branch on code() rather than on the message text.
class SokobanError : public std::runtime_error {
public:
    SokobanError(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sokoban
