#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pythag {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (e.g. non-positive runs).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Mixed per-game and season-total quantities in one operation.
class UnitError : public Error {
public:
    using Error::Error;
};

/// Malformed numeric field or unreadable row; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Missing or unexpected columns / header.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A record violates a domain invariant (e.g. wins + losses > games).
class ValidationError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Regression design with no usable variation in the regressor.
class DegenerateDesignError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

/// Request exceeds a hard resource cap (e.g. grid too large).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Bad command-line usage; maps to exit code 2 in the CLI.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace pythag
