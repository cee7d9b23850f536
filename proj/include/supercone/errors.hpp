#pragma once

#include <stdexcept>
#include <string>

namespace supercone {

/// Bad algebra descriptor or parameter combination.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates an operation precondition (dimensions, dominance, set invariants).
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// Operation not defined for the given algebra family.
struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

/// A computation hit an internal safety bound or inconsistency.
struct ComputationError : std::runtime_error {
    explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace supercone
