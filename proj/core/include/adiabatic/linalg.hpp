#pragma once

#include <complex>

#include <Eigen/Dense>

namespace adiabatic {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues of a Hermitian matrix in ascending order.
RealVector hermitian_eigenvalues(const Matrix& m);

/// Eigenvalues at or below this are treated as rounding noise.
inline constexpr double kSpectralFloor = 1e-14;

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues at or below kSpectralFloor map to zero.
Matrix hermitian_sqrt(const Matrix& m);

/// exp(-i * time * h) for Hermitian h, via eigendecomposition.
Matrix unitary_propagator(const Matrix& h, double time);

/// Largest entrywise modulus of m - m^dagger.
double hermiticity_defect(const Matrix& m);

/// Kronecker product a (x) b, with b's index running fastest.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace adiabatic
