#pragma once

#include <cstddef>
#include <random>

#include "adiabatic/states.hpp"

namespace adiabatic {

using Rng = std::mt19937_64;

/// Haar-distributed unitary (QR of a complex Ginibre matrix with the
/// phases of R's diagonal divided out).
Matrix haar_unitary(std::size_t dim, Rng& rng);

/// Haar-random pure state.
PureState random_pure_state(std::size_t dim, Rng& rng);

/// Random density matrix of the given rank: partial trace of a random
/// pure state on dim x rank.
DensityMatrix random_density_matrix(std::size_t dim, std::size_t rank, Rng& rng);

}  // namespace adiabatic
