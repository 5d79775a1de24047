#pragma once

#include <stdexcept>
#include <string>

namespace knotmosaic {

enum class ErrorCode {
    NotSuitablyConnected,
    NotAKnot,
    NonEmptyBorder,
    ParseError,
    TooManyCrossings,
    UnsupportedFilter,
    FeasibilityLimit,
    NotApplicable,
    BadToken,
    LabelCountMismatch,
    NotRealizable,
    InvalidArgument,
};

/// Domain error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace knotmosaic
