#pragma once

#include <stdexcept>
#include <string>

namespace linrel {

/// Raised when an operation's semantic preconditions are violated
/// (field or ambient mismatch, invalid morphism for a category, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an input document cannot be parsed at all.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace linrel
