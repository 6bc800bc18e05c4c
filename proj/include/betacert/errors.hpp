#pragma once

#include <stdexcept>
#include <string>

namespace betacert {

// Input outside the mathematical domain of an operation (q <= 1, k < 2, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Text or structured input that cannot be parsed or is inconsistent with itself.
struct MalformedInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation is not met.
struct PreconditionViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// The requested precision cannot resolve a comparison the caller needs.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Node, enumeration or time budget exhausted.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed (e.g. an ordering that must hold does not).
struct InconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace betacert
