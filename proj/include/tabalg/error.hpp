#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tabalg {

enum class Errc {
    ShapeNotPartition,
    RowNotWeaklyIncreasing,
    ColumnNotStrictlyIncreasing,
    EntryOutOfRange,
    BoundExceeded,
    InvalidBounds,
    InvalidColumn,
    NotTwoColumns,
    NonIntegralResult,
    IndexMismatch,
    ShapeIsColumn,
    RelationViolated,
    NotOrdinary,
    TooManyParts,
    ShapeMismatch,
    InterlacingViolated,
    ParseError,
    InternalError,
};

std::string_view to_string(Errc code) noexcept;

/// Domain error raised by every tabalg operation. The code identifies the
/// violated contract; the message carries the offending detail.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace tabalg
