#pragma once

#include <stdexcept>
#include <string>

namespace adiabatic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: wrong dimensions, out-of-range parameters,
/// states that violate their normalization or positivity invariants.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : InvalidArgument("dimension mismatch: " + std::to_string(lhs) +
                        " vs " + std::to_string(rhs)) {}
};

class InvalidEpsilon : public InvalidArgument {
 public:
  explicit InvalidEpsilon(double epsilon)
      : InvalidArgument("epsilon must lie in (0, 1], got " +
                        std::to_string(epsilon)) {}
};

class AncillaTooSmall : public InvalidArgument {
 public:
  AncillaTooSmall(std::size_t ancilla_dim, std::size_t rank)
      : InvalidArgument("ancilla dimension " + std::to_string(ancilla_dim) +
                        " is smaller than the state rank " +
                        std::to_string(rank)) {}
};

/// The truth table is neither constant nor balanced.
class NotPromised : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Domain error: the fidelity vanishes, so the runtime is infinite.
class OrthogonalStates : public Error {
 public:
  OrthogonalStates()
      : Error("states are orthogonal: infinite running time") {}
};

/// Domain error: the fidelity is one, so there is nothing to evolve and the
/// Gram-Schmidt partner of the initial state is undefined.
class IdenticalStates : public Error {
 public:
  IdenticalStates() : Error("states are identical: running time is zero") {}
};

/// Numerical failure: a propagation step lost unitarity beyond tolerance.
class StepTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace adiabatic
