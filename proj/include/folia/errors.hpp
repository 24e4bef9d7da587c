#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folia {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
public:
    RingMismatch() : Error("operands belong to different polynomial rings") {}
};

/// A documented precondition of an operation was violated (index out of
/// range, wrong length, division by zero, degree underflow, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured resource limit (S-pair budget, degree bound) was exceeded.
/// Computations never truncate silently; they throw this instead.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Input text could not be parsed.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Input was well formed but meaningless (unknown variable, mixed degrees,
/// zero foliation form, ...).
class SemanticError : public Error {
public:
    using Error::Error;
};

} // namespace folia
