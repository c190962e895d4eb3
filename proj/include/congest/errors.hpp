#pragma once

#include <stdexcept>
#include <string>

namespace congest {

// Bad caller input (unknown node id, malformed set, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Operation requested beyond a documented capability cap.
struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Structural precondition violated (e.g. disconnected view).
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A communication-layer contract was broken: oversized message, overloaded
// edge or node. These are hard errors; the load bounds are the point.
struct ProtocolViolation : std::runtime_error {
    explicit ProtocolViolation(const std::string& what) : std::runtime_error(what) {}
};

// An internal arithmetic invariant that should be impossible to break.
struct InvariantFailure : std::logic_error {
    explicit InvariantFailure(const std::string& what) : std::logic_error(what) {}
};

// A randomized step exhausted its retry budget.
struct StatisticalFailure : std::runtime_error {
    explicit StatisticalFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace congest
