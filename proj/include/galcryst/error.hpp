#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galcryst {

enum class ErrorCode {
    RankInvalid,
    EmptyColumn,
    NonIncreasingColumn,
    LetterOutOfRange,
    ColumnTooLong,
    RankMismatch,
    IndexOutOfRange,
    NotDominant,
    BrokenColumn,
    ShapeInvalid,
    NotConnected,
    InvalidLabel,
    SvgRankUnsupported,
    ParseError,
};

// Stable machine-readable names, used in CLI error JSON.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace galcryst
