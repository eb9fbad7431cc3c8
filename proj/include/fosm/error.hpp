#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fosm {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg)
        , line_(line)
        , column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ArityError : public Error {
public:
    using Error::Error;
};

class SignatureError : public Error {
public:
    using Error::Error;
};

/// A formula mentions a constant the interpretation does not cover.
class UncoveredConstantError : public Error {
public:
    using Error::Error;
};

/// The configured candidate cap would be exceeded.
class EnumerationLimitError : public Error {
public:
    using Error::Error;
};

/// Input outside the fragment an operation supports (function symbols in
/// search mode, non-ground rules where ground ones are required, ...).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

class IncompatibleError : public Error {
public:
    using Error::Error;
};

class StepError : public Error {
public:
    using Error::Error;
};

/// Raised when a result the theory guarantees does not hold. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace fosm
