#pragma once

#include <stdexcept>
#include <string>

namespace pdw {

/// Parse failure in one of the text formats. what() carries the line number
/// and the offending text.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured resource bound was exhausted before an answer was reached
/// (simulation step ceiling, solver depth or height budget, slice abort).
/// Deliberately distinct from a negative verdict: callers map it to its own
/// exit code.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pdw
