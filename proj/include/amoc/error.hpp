// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amoc {

// Usage problems: bad options, unreadable paths, invalid keyword-group
// configs. The CLI maps these to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Problems inside otherwise readable data: malformed records, bad CSV rows,
// degenerate series. The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// DataError pinned to a 1-based line of the offending input.
class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& reason)
        : DataError("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace amoc
