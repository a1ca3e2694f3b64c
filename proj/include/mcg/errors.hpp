#pragma once

#include <stdexcept>
#include <string>

namespace mcg {

/// Raised when an argument falls outside the domain of an operation
/// (bad genus, non-positive radicand, wrong matrix shape, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the parameters are well-formed but a bound's hypothesis
/// cannot be certified, e.g. a dilatation too large for the curve-complex bound.
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arithmetic between elements of Q[sqrt(m)] and Q[sqrt(n)] with m != n.
class RadicandMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation that ran but produced no admissible answer
/// (no hyperbolic class in a search radius, a reducible PF input, ...).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mcg
