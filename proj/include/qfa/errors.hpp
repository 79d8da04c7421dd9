#pragma once

#include <stdexcept>
#include <string>

namespace qfa {

/// Thrown when an input file or JSON document does not match the expected
/// machine schema.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a machine violates a structural invariant: a non-unitary
/// operator, a state index out of range, an empty cycle.
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qfa
