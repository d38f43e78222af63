#pragma once

#include <stdexcept>
#include <string>

namespace embz {

/// Argument outside the mathematical domain of an operation (zero divisor,
/// non-positive square root, ancilla key where a catalyst is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured resource bound was exceeded (factoring bound, qubit cap).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Lane counts, widths or vector lengths do not line up.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A target vector has fewer than two nonzero Schmidt coefficients.
class NotEntangledError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation touched something the state does not describe.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace embz
