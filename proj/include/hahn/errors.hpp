#pragma once

#include <stdexcept>
#include <string>

namespace hahn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in exponent groups of different depth.
class DepthMismatch : public Error {
public:
    using Error::Error;
};

/// The answer depends on terms beyond the known precision.
class Indeterminate : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition failed (division by zero, element outside a ring, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A computation would need more precision than its inputs carry, or would
/// have to sum across archimedean classes of the value group.
class PrecisionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace hahn
