#include "adiabatic/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adiabatic/errors.hpp"
#include "purification_sampling.hpp"

namespace adiabatic {
namespace {

void require_same_dim(std::size_t lhs, std::size_t rhs) {
  if (lhs != rhs) throw DimensionMismatch(lhs, rhs);
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

// tr sqrt(sqrt(rho) sigma sqrt(rho)) for one argument order.
double fidelity_one_way(const Matrix& rho, const Matrix& sigma) {
  Matrix root = hermitian_sqrt(rho);
  Matrix inner = root * sigma * root;
  inner = 0.5 * (inner + inner.adjoint()).eval();
  RealVector w = hermitian_eigenvalues(inner);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) > kSpectralFloor) sum += std::sqrt(w(i));
  }
  return sum;
}

// Eigenvectors with the phase of the largest-modulus entry removed, sorted by
// descending eigenvalue.
struct CanonicalEigen {
  RealVector values;
  Matrix vectors;
};

CanonicalEigen canonical_eigen(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  const Eigen::Index n = m.rows();
  CanonicalEigen out{RealVector(n), Matrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = n - 1 - k;
    Vector v = solver.eigenvectors().col(src);
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    v *= std::conj(v(pivot)) / std::abs(v(pivot));
    out.values(k) = solver.eigenvalues()(src);
    out.vectors.col(k) = v;
  }
  return out;
}

}  // namespace

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 2) {
    throw InvalidArgument("pure state dimension must be at least 2");
  }
  const double norm_sq = amplitudes_.squaredNorm();
  if (!std::isfinite(norm_sq) || std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw InvalidArgument("pure state is not normalized (norm^2 = " +
                          std::to_string(norm_sq) + ")");
  }
}

PureState PureState::normalized(Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvalidArgument("cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidArgument("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v));
}

PureState PureState::uniform(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return PureState(Vector::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(dim)))));
}

Complex PureState::inner(const PureState& other) const {
  require_same_dim(dim(), other.dim());
  return amplitudes_.dot(other.amplitudes_);
}

DensityMatrix PureState::projector() const {
  Matrix m = amplitudes_ * amplitudes_.adjoint();
  // Exact hermiticity; the outer product is Hermitian only up to rounding.
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(std::move(m));
}

DensityMatrix::DensityMatrix(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw InvalidArgument("density matrix must be square and nonempty");
  }
  if (!matrix_.allFinite()) throw InvalidArgument("density matrix has non-finite entries");
  if (hermiticity_defect(matrix_) > kHermitianTolerance) {
    throw InvalidArgument("density matrix is not Hermitian");
  }
  const Complex trace = matrix_.trace();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    throw InvalidArgument("density matrix trace is " + std::to_string(trace.real()) +
                          ", expected 1");
  }
  if (hermitian_eigenvalues(matrix_).minCoeff() < -kPsdTolerance) {
    throw InvalidArgument("density matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityMatrix(Matrix::Identity(n, n) / static_cast<double>(dim));
}

std::size_t DensityMatrix::rank() const {
  RealVector w = hermitian_eigenvalues(matrix_);
  return static_cast<std::size_t>((w.array() > kPsdTolerance).count());
}

Matrix Purification::reduced() const {
  const auto sys = static_cast<Eigen::Index>(system_dim);
  const auto anc = static_cast<Eigen::Index>(ancilla_dim);
  // Row i of `block` holds the ancilla amplitudes attached to system index i.
  Matrix block(sys, anc);
  for (Eigen::Index i = 0; i < sys; ++i) {
    for (Eigen::Index k = 0; k < anc; ++k) block(i, k) = joint[static_cast<std::size_t>(i * anc + k)];
  }
  return block * block.adjoint();
}

double fidelity_pure(const PureState& a, const PureState& b) {
  return clamp_unit(std::abs(a.inner(b)));
}

double fidelity_mixed(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.dim(), sigma.dim());
  const double forward = fidelity_one_way(rho.matrix(), sigma.matrix());
  const double backward = fidelity_one_way(sigma.matrix(), rho.matrix());
  return clamp_unit(0.5 * (forward + backward));
}

double angle(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return std::acos(fidelity_mixed(rho, sigma));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.dim(), sigma.dim());
  Matrix diff = rho.matrix() - sigma.matrix();
  diff = 0.5 * (diff + diff.adjoint()).eval();
  return clamp_unit(0.5 * hermitian_eigenvalues(diff).cwiseAbs().sum());
}

double trace_distance_pure(const PureState& a, const PureState& b) {
  const double f = fidelity_pure(a, b);
  return std::sqrt(std::max(0.0, 1.0 - f * f));
}

Purification purify(const DensityMatrix& rho, std::size_t ancilla_dim) {
  if (ancilla_dim == 0) throw InvalidArgument("ancilla dimension must be positive");
  const std::size_t rank = rho.rank();
  if (ancilla_dim < rank) throw AncillaTooSmall(ancilla_dim, rank);

  CanonicalEigen eig = canonical_eigen(rho.matrix());
  const auto sys = static_cast<Eigen::Index>(rho.dim());
  const auto anc = static_cast<Eigen::Index>(ancilla_dim);
  const Eigen::Index kept = std::min(sys, anc);

  Vector joint = Vector::Zero(sys * anc);
  for (Eigen::Index k = 0; k < kept; ++k) {
    const double weight = std::sqrt(std::max(eig.values(k), 0.0));
    for (Eigen::Index i = 0; i < sys; ++i) {
      joint(i * anc + k) += weight * eig.vectors(i, k);
    }
  }
  return Purification{rho.dim(), ancilla_dim, PureState::normalized(std::move(joint))};
}

UhlmannResult uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma,
                               std::size_t budget, std::uint64_t seed) {
  require_same_dim(rho.dim(), sigma.dim());
  Matrix product = hermitian_sqrt(sigma.matrix()) * hermitian_sqrt(rho.matrix());
  Eigen::JacobiSVD<Matrix> svd(product);
  const double exact = clamp_unit(svd.singularValues().sum());

  double estimate = 0.0;
  detail::for_each_purification_pair(rho, sigma, budget, seed,
                                     [&](const PureState& psi, const PureState& phi) {
                                       estimate = std::max(estimate, fidelity_pure(psi, phi));
                                     });
  return UhlmannResult{estimate, exact};
}

}  // namespace adiabatic
