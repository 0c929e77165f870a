// errors.hpp
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace racklab {

/// Input table has the wrong shape or an out-of-range entry.
class MalformedTable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotAGroup : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotAbelian : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotAutomorphism : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class OrderTooLarge : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Truncated stream, bad magic, trailing garbage or an out-of-range field.
class CorruptStream : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A well-formed stream whose reconstructed maps do not form a rack.
class InconsistentDecode : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// ".rack" text parse failure; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace racklab
