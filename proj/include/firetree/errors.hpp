#pragma once

#include <stdexcept>
#include <string>

namespace firetree {

// Malformed input: tree files, sequence specs, strategy configs.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration / search / materialisation would exceed its size guard.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructor could not produce its object (separating tree, losing
// instance, targeting witness) because a hypothesis is not met.
struct ConstructionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violated by the caller.
struct InvalidInstance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace firetree
