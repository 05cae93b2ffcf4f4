#pragma once

#include <stdexcept>
#include <string>

namespace possreason {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands that do not fit together: universe mismatch, unknown variable, crisp set required.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured size limit (cells, disjuncts, oracle universe) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Knowledge-base text could not be turned into a valid KnowledgeBase.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          message_(std::move(message)),
          line_(line),
          column_(column) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// A knowledge-base file could not be read.
class IoError : public Error {
public:
    using Error::Error;
};

/// The priority edges contain a cycle; what() names it.
class ScheduleError : public Error {
public:
    using Error::Error;
};

}  // namespace possreason
