#include "adiabatic/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace adiabatic {

RealVector hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Matrix hermitian_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  RealVector roots = solver.eigenvalues().unaryExpr(
      [](double v) { return v > kSpectralFloor ? std::sqrt(v) : 0.0; });
  const Matrix& v = solver.eigenvectors();
  return v * roots.cast<Complex>().asDiagonal() * v.adjoint();
}

Matrix unitary_propagator(const Matrix& h, double time) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const RealVector& w = solver.eigenvalues();
  Vector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    phases(i) = std::polar(1.0, -time * w(i));
  }
  const Matrix& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

double hermiticity_defect(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace adiabatic
