#pragma once

#include <stdexcept>
#include <string>

namespace trdom {

// Malformed input text. Messages carry 1-based line numbers where possible.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A solver or oracle was asked to run beyond its guarded instance size.
// The message names the limit.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trdom
