#pragma once

#include <stdexcept>
#include <string>

namespace curvelab {

/// Raised for inputs that violate an operation's preconditions.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a geometric predicate can not be decided at the working
/// precision. Callers retry with more digits.
class DegenerateGeometry : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bounds from different sources that can not both hold.
class ContradictoryBounds : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a long computation is stopped through its progress hook.
class Cancelled : public std::runtime_error {
public:
    Cancelled() : std::runtime_error("cancelled") {}
};

} // namespace curvelab
