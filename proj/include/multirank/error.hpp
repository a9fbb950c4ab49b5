#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multirank {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed state document. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error(format(line, column, message)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(std::size_t line, std::size_t column, const std::string& message) {
        if (line == 0) return message;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

// Invalid dimensions, out-of-range indices, mismatched operands.
class DomainError : public Error {
public:
    using Error::Error;
};

// Every amplitude cancelled.
class ZeroStateError : public Error {
public:
    ZeroStateError() : Error("state is zero: every term cancels") {}
};

// A rank routine was asked to do something its inputs do not allow,
// e.g. exact rank of a matrix with parametric entries.
class PolicyError : public Error {
public:
    using Error::Error;
};

}  // namespace multirank
