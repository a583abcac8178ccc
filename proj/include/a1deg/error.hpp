#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace a1deg {

/// Raised when an input is well-formed but mathematically invalid
/// (degenerate form, non-isolated zeros, unsupported field, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the text readers; carries the 1-based column of the offending
/// character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t column)
        : std::runtime_error("parse error at column " + std::to_string(column) + ": " + message),
          column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

} // namespace a1deg
