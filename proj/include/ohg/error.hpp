#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ohg {

enum class Errc {
    InvalidName,
    DuplicateVertex,
    DuplicateContext,
    SubsetContext,
    EmptyContext,
    UnknownVertex,
    ColumnCountMismatch,
    RowLimitExceeded,
    NotAGadgetPair,
    AllZeroColumn,
    SizeLimit,
    NotProper,
    NotDominating,
    NotAState,
    Disconnected,
    UnknownFixture,
    AdjacentTerminals,
    RankMismatch,
    NotTifs,
    DimensionMismatch,
    MissingVertex,
    ParseError,
    InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace ohg
