#pragma once

#include <stdexcept>
#include <string>

namespace minkorder {

// Error taxonomy shared by the library, the C API and the CLI exit codes:
// input_error -> 1, precondition_error -> 2, internal_error -> 3.

/// Malformed input: bad JSON, bad rational literal, dimension mismatch.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input that violates an operation's precondition
/// (lightlike pair, tied critical velocities, n != 1 for a sweep, cap
/// exceeded, ...).
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant. Reaching this is a bug.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace minkorder
