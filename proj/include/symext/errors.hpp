#pragma once

#include <stdexcept>
#include <string>

namespace symext {

// Bad user input: malformed arguments, violated preconditions.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured cap (period, depth, enumeration size) was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction step could not be certified (oracle inequalities, hierarchy mismatch).
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Spec file problems; `path` names the offending field.
struct SchemaError : std::runtime_error {
    SchemaError(std::string field, const std::string& what)
        : std::runtime_error(field.empty() ? what : field + ": " + what), path(std::move(field)) {}
    std::string path;
};

// Broken internal assumption (should not happen on valid input).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace symext
