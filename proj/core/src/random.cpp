#include "adiabatic/random.hpp"

#include <cmath>

#include "adiabatic/errors.hpp"

namespace adiabatic {
namespace {

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  return g;
}

}  // namespace

Matrix haar_unitary(std::size_t dim, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::HouseholderQR<Matrix> qr(ginibre(n, n, rng));
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex diag = r(j, j);
    const double mod = std::abs(diag);
    if (mod > 0.0) q.col(j) *= diag / mod;
  }
  return q;
}

PureState random_pure_state(std::size_t dim, Rng& rng) {
  return PureState::normalized(ginibre(static_cast<Eigen::Index>(dim), 1, rng).col(0));
}

DensityMatrix random_density_matrix(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank == 0 || rank > dim) throw InvalidArgument("rank must lie in [1, dim]");
  Matrix g = ginibre(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(rank), rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(std::move(m));
}

}  // namespace adiabatic
