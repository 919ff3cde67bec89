#pragma once

#include <cstdint>

#include "adiabatic/errors.hpp"
#include "adiabatic/random.hpp"
#include "adiabatic/states.hpp"

namespace adiabatic::detail {

// Visits (psi, (I (x) U) phi) for `budget` Haar ancilla rotations U, the first
// being the identity. psi and phi are the canonical purifications of rho and
// sigma with a full-size ancilla.
template <typename Visitor>
void for_each_purification_pair(const DensityMatrix& rho, const DensityMatrix& sigma,
                                std::size_t budget, std::uint64_t seed, Visitor&& visit) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch(rho.dim(), sigma.dim());
  if (budget == 0) throw InvalidArgument("purification budget must be at least 1");
  const std::size_t d = rho.dim();
  const auto n = static_cast<Eigen::Index>(d);
  const PureState psi = purify(rho, d).joint;
  const PureState phi = purify(sigma, d).joint;

  // Row i of the block holds the ancilla amplitudes of system index i, so the
  // rotated state (I (x) U)|phi> has block phi_block * U^T.
  Matrix phi_block(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) phi_block(i, k) = phi[static_cast<std::size_t>(i * n + k)];

  Rng rng(seed);
  for (std::size_t sample = 0; sample < budget; ++sample) {
    if (sample == 0) {
      visit(psi, phi);
      continue;
    }
    Matrix rotated = phi_block * haar_unitary(d, rng).transpose();
    Vector joint = rotated.transpose().reshaped();
    visit(psi, PureState::normalized(std::move(joint)));
  }
}

}  // namespace adiabatic::detail
