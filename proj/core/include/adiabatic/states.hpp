#pragma once

#include <cstddef>
#include <cstdint>

#include "adiabatic/linalg.hpp"

namespace adiabatic {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

/// Seed used by every stochastic routine unless the caller passes one.
inline constexpr std::uint64_t kDefaultSeed = 20070326;

class DensityMatrix;

/// Unit-norm amplitude vector of dimension >= 2.
class PureState {
 public:
  /// Throws InvalidArgument unless the vector is normalized to 1e-12.
  explicit PureState(Vector amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(Vector amplitudes);
  static PureState basis(std::size_t dim, std::size_t index);
  static PureState uniform(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  /// <this|other>
  Complex inner(const PureState& other) const;
  DensityMatrix projector() const;

 private:
  Vector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates hermiticity (1e-12), trace (1e-12) and positivity (-1e-10).
  explicit DensityMatrix(Matrix matrix);

  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }

  /// Number of eigenvalues above kPsdTolerance.
  std::size_t rank() const;

 private:
  Matrix matrix_;
};

/// Joint pure state on system (x) ancilla whose ancilla-traced reduction is
/// the source density matrix. Joint index = system_index * ancilla_dim +
/// ancilla_index.
struct Purification {
  std::size_t system_dim;
  std::size_t ancilla_dim;
  PureState joint;

  /// Partial trace of |joint><joint| over the ancilla.
  Matrix reduced() const;
};

struct UhlmannResult {
  double estimate;  // best sampled purification overlap
  double exact;     // nuclear norm of sqrt(sigma) sqrt(rho)
};

/// |<a|b>|
double fidelity_pure(const PureState& a, const PureState& b);

/// tr sqrt(sqrt(rho) sigma sqrt(rho)), symmetrized over argument order and
/// clamped to [0, 1].
double fidelity_mixed(const DensityMatrix& rho, const DensityMatrix& sigma);

/// arccos of fidelity_mixed, in [0, pi/2].
double angle(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Half the sum of |eigenvalues| of rho - sigma.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Closed-form trace distance sqrt(1 - |<a|b>|^2) between two pure states.
double trace_distance_pure(const PureState& a, const PureState& b);

/// Canonical purification sum_k sqrt(lambda_k) |e_k> (x) |k> built from the
/// eigendecomposition of rho, eigenvalues in descending order. Each
/// eigenvector's phase is fixed so its largest component is real positive.
Purification purify(const DensityMatrix& rho, std::size_t ancilla_dim);

/// Exact Uhlmann fidelity and a sampled lower estimate. The estimate keeps
/// rho's canonical purification fixed and rotates sigma's purification by
/// Haar-random ancilla unitaries; the first of the `budget` samples uses the
/// identity rotation.
UhlmannResult uhlmann_fidelity(const DensityMatrix& rho,
                               const DensityMatrix& sigma, std::size_t budget,
                               std::uint64_t seed = kDefaultSeed);

}  // namespace adiabatic
