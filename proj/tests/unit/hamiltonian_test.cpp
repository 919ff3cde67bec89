#include "adiabatic/hamiltonian.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "adiabatic/applications.hpp"
#include "adiabatic/errors.hpp"
#include "oracles.hpp"

namespace adiabatic {
namespace {

using testing::dense_eigenvalues;
using testing::eigenvalues_2x2;
using testing::finite_difference_matrix_element;
using testing::pair_with_overlap;

AdiabaticProblem random_problem(std::size_t dim, double a, Rng& rng) {
  const auto [alpha, beta] = pair_with_overlap(dim, a, rng);
  return build_problem(alpha, beta);
}

// y_i exactly as the eigenvector relation states it, for s > 0.
double y_literal(double a, double s, double energy) {
  const double b = std::sqrt(1.0 - a * a);
  return b / a - energy / (s * a * b);
}

TEST(BuildProblemTest, TwoDimensionalGramSchmidtByHand) {
  const PureState alpha = PureState::basis(2, 0);
  const PureState beta = PureState::normalized(Vector::Constant(2, 1.0));
  const AdiabaticProblem p = build_problem(alpha, beta);
  EXPECT_NEAR(p.a(), 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(p.c(), 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(std::abs(p.basis2()[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p.basis2()[1] - 1.0), 0.0, 1e-15);
}

TEST(BuildProblemTest, GroverFour) {
  const auto [alpha, beta] = grover_instance(4, 3);
  const AdiabaticProblem p = build_problem(alpha, beta);
  EXPECT_NEAR(p.a(), 0.5, 1e-15);
  EXPECT_NEAR(p.c(), std::sqrt(3.0) / 2.0, 1e-15);
}

TEST(BuildProblemTest, InvariantsOnRandomPairs) {
  Rng rng(20);
  for (int trial = 0; trial < 50; ++trial) {
    const PureState alpha = random_pure_state(8, rng);
    const PureState beta = random_pure_state(8, rng);
    const AdiabaticProblem p = build_problem(alpha, beta);
    EXPECT_NEAR(std::abs(alpha.inner(p.basis2())), 0.0, 1e-12);
    const Vector rebuilt = p.c() * p.basis2().amplitudes() + p.overlap() * alpha.amplitudes();
    EXPECT_LE((rebuilt - beta.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(p.a() * p.a() + p.c() * p.c(), 1.0, 1e-12);
    EXPECT_TRUE((p.lift(p.beta_effective()) - beta.amplitudes()).isZero(1e-12));
  }
}

TEST(BuildProblemTest, DegenerateOverlapsAreRejected) {
  const PureState zero = PureState::basis(3, 0);
  EXPECT_THROW(build_problem(zero, PureState::basis(3, 1)), OrthogonalStates);
  EXPECT_THROW(build_problem(zero, zero), IdenticalStates);
  const PureState phased(zero.amplitudes() * Complex(0.0, 1.0));
  const AdiabaticProblem p = build_problem(zero, phased, IdenticalPolicy::kAllow);
  EXPECT_TRUE(p.identical());
  EXPECT_EQ(p.a(), 1.0);
  EXPECT_EQ(p.c(), 0.0);
  EXPECT_THROW(p.basis2(), InvalidArgument);
  EXPECT_THROW(build_problem(zero, PureState::basis(4, 0)), DimensionMismatch);
}

TEST(HamiltonianFullTest, Endpoints) {
  Rng rng(21);
  const AdiabaticProblem p = random_problem(5, 0.4, rng);
  const Vector& alpha = p.alpha().amplitudes();
  const Vector& beta = p.beta().amplitudes();
  EXPECT_TRUE((hamiltonian_full(p, 0.0) * alpha).isZero(1e-14));
  EXPECT_TRUE((hamiltonian_full(p, 1.0) * beta).isZero(1e-14));
  const Matrix h0 = Matrix::Identity(5, 5) - alpha * alpha.adjoint();
  EXPECT_TRUE(hamiltonian_full(p, 0.0).isApprox(h0, 1e-14));
  EXPECT_THROW(hamiltonian_full(p, 1.5), InvalidArgument);
}

TEST(HamiltonianFullTest, MatchesEffectiveBlockAfterBasisChange) {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const AdiabaticProblem p = build_problem(random_pure_state(6, rng), random_pure_state(6, rng));
    // Orthonormal basis whose first two columns are |1>, |2>.
    Matrix basis(6, 6);
    basis.col(0) = p.alpha().amplitudes();
    basis.col(1) = p.basis2().amplitudes();
    Matrix rest = haar_unitary(6, rng);
    Eigen::Index filled = 2;
    for (Eigen::Index k = 0; k < 6 && filled < 6; ++k) {
      Vector v = rest.col(k);
      for (Eigen::Index j = 0; j < filled; ++j) v -= basis.col(j).dot(v) * basis.col(j);
      if (v.norm() > 1e-6) basis.col(filled++) = v.normalized();
    }
    const Matrix rotated = basis.adjoint() * hamiltonian_full(p, 0.5) * basis;
    EXPECT_LE((rotated.topLeftCorner(2, 2) - hamiltonian_effective(p, 0.5)).cwiseAbs().maxCoeff(),
              1e-12);
    EXPECT_LE(rotated.topRightCorner(2, 4).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_TRUE(rotated.bottomRightCorner(4, 4).isIdentity(1e-12));
  }
}

TEST(HamiltonianFullTest, EigenvaluesInUnitIntervalAndHermitian) {
  Rng rng(23);
  const AdiabaticProblem p = build_problem(random_pure_state(7, rng), random_pure_state(7, rng));
  for (double s = 0.0; s <= 1.0; s += 0.125) {
    const Matrix h = hamiltonian_full(p, s);
    EXPECT_EQ(hermiticity_defect(h), 0.0);
    const Eigen::VectorXd w = dense_eigenvalues(h);
    EXPECT_GE(w.minCoeff(), -1e-12);
    EXPECT_LE(w.maxCoeff(), 1.0 + 1e-12);
  }
}

TEST(HamiltonianEffectiveTest, Examples) {
  Rng rng(24);
  const AdiabaticProblem p = random_problem(4, 0.5, rng);
  const Eigen::Matrix2cd h0 = hamiltonian_effective(p, 0.0);
  EXPECT_TRUE(h0.isApprox((Eigen::Matrix2cd() << 0, 0, 0, 1).finished()));

  const Complex phase = p.overlap() / 0.5;
  const Eigen::Matrix2cd h1 = hamiltonian_effective(p, 1.0);
  EXPECT_NEAR(std::abs(h1(0, 0) - 0.75), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(h1(1, 1) - 0.25), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(h1(0, 1) + std::sqrt(3.0) / 4.0 * phase), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(h1(1, 0) + std::sqrt(3.0) / 4.0 * std::conj(phase)), 0.0, 1e-14);
  EXPECT_TRUE(h1.isApprox(h1.adjoint()));
}

TEST(SpectrumTest, Examples) {
  Rng rng(25);
  const AdiabaticProblem p = random_problem(4, 0.5, rng);
  const SpectrumPoint start = spectrum(p, 0.0);
  EXPECT_EQ(start.e0, 0.0);
  EXPECT_EQ(start.e1, 1.0);
  EXPECT_EQ(start.gap, 1.0);
  EXPECT_EQ(start.y0, 0.0);
  EXPECT_TRUE(std::isinf(start.y1));
  EXPECT_NEAR(spectrum(p, 0.5).gap, 0.5, 1e-15);
}

TEST(SpectrumTest, ClosedFormMatchesTwoByTwoAndDenseDiagonalization) {
  Rng rng(26);
  std::uniform_real_distribution<double> unit(0.02, 0.98);
  for (int trial = 0; trial < 40; ++trial) {
    const AdiabaticProblem p = random_problem(6, unit(rng), rng);
    const double s = unit(rng);
    const SpectrumPoint sp = spectrum(p, s);
    const auto two = eigenvalues_2x2(hamiltonian_effective(p, s));
    EXPECT_NEAR(sp.e0, two[0], 1e-12);
    EXPECT_NEAR(sp.e1, two[1], 1e-12);
    const Eigen::VectorXd w = dense_eigenvalues(hamiltonian_full(p, s));
    EXPECT_NEAR(sp.e0, w(0), 1e-10);
    EXPECT_NEAR(sp.e1, w(1), 1e-10);
    for (Eigen::Index k = 2; k < w.size(); ++k) EXPECT_NEAR(w(k), 1.0, 1e-10);
  }
}

TEST(SpectrumTest, PointInvariants) {
  Rng rng(27);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = 0.01 + 0.98 * unit(rng);
    const AdiabaticProblem p = effective_problem(a, 2);
    const double s = unit(rng);
    const SpectrumPoint sp = spectrum(p, s);
    EXPECT_NEAR(sp.e0 + sp.e1, 1.0, 1e-12);
    EXPECT_GE(sp.gap, a - 1e-12);
    EXPECT_NEAR(sp.gap, sp.e1 - sp.e0, 1e-12);
    EXPECT_NEAR(sp.gap, spectrum(p, 1.0 - s).gap, 1e-12);
    if (s > 0.0) {
      EXPECT_NEAR(sp.y0 * sp.y1, -1.0, 1e-9);
      if (a > 0.05 && s > 0.01) {
        EXPECT_NEAR(sp.y0, y_literal(a, s, sp.e0), 1e-8 * (1.0 + std::abs(sp.y0)));
        EXPECT_NEAR(sp.y1, y_literal(a, s, sp.e1), 1e-8 * (1.0 + std::abs(sp.y1)));
      }
    }
  }
}

TEST(SpectrumTest, EigenvectorsDiagonalizeEffectiveHamiltonian) {
  Rng rng(28);
  for (int trial = 0; trial < 50; ++trial) {
    const AdiabaticProblem p = random_problem(5, 0.05 + 0.018 * trial, rng);
    for (double s : {0.0, 0.01, 0.3, 0.5, 0.77, 1.0}) {
      const Eigen::Matrix2cd v = effective_eigenvectors(p, s);
      const Eigen::Matrix2cd h = hamiltonian_effective(p, s);
      const SpectrumPoint sp = spectrum(p, s);
      EXPECT_LE((h * v.col(0) - sp.e0 * v.col(0)).norm(), 1e-10);
      EXPECT_LE((h * v.col(1) - sp.e1 * v.col(1)).norm(), 1e-10);
      EXPECT_NEAR(std::abs(v.col(0).dot(v.col(1))), 0.0, 1e-10);
      EXPECT_NEAR(std::abs(v.col(0).dot(h * v.col(1))), 0.0, 1e-10);
    }
  }
}

TEST(SpectrumTest, ContinuityLimitAtZero) {
  Rng rng(29);
  const AdiabaticProblem p = random_problem(4, 0.3, rng);
  const Eigen::Matrix2cd v = effective_eigenvectors(p, 0.0);
  EXPECT_TRUE(v.isApprox(Eigen::Matrix2cd::Identity()));
  const Eigen::Matrix2cd near = effective_eigenvectors(p, 1e-9);
  EXPECT_LE((near - v).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(SpectrumTest, DependsOnlyOnModulus) {
  Rng rng(30);
  const auto [alpha, beta] = pair_with_overlap(5, 0.35, rng);
  const AdiabaticProblem p = build_problem(alpha, beta);
  const AdiabaticProblem q = build_problem(alpha, PureState(beta.amplitudes() * std::polar(1.0, 2.1)));
  for (double s = 0.0; s <= 1.0; s += 0.1) {
    const SpectrumPoint x = spectrum(p, s);
    const SpectrumPoint y = spectrum(q, s);
    EXPECT_NEAR(x.e0, y.e0, 1e-12);
    EXPECT_NEAR(x.e1, y.e1, 1e-12);
    EXPECT_NEAR(x.gap, y.gap, 1e-12);
    EXPECT_NEAR(x.y0, y.y0, 1e-12);
    if (s > 0.0) EXPECT_NEAR(x.y1, y.y1, 1e-12 * std::abs(x.y1));
  }
}

TEST(SpectrumTest, FullSpaceEigenvectorsAreOrthogonalAndDecoupled) {
  Rng rng(31);
  const AdiabaticProblem p = random_problem(6, 0.4, rng);
  for (double s : {0.1, 0.5, 0.9}) {
    const Vector e0 = ground_state(p, s);
    const Vector e1 = p.lift(effective_eigenvectors(p, s).col(1));
    const Matrix h = hamiltonian_full(p, s);
    EXPECT_NEAR(std::abs(e0.dot(e1)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(e0.dot(h * e1)), 0.0, 1e-10);
    EXPECT_LE((h * e0 - spectrum(p, s).e0 * e0).norm(), 1e-10);
  }
}

TEST(MatrixElementTest, Examples) {
  Rng rng(32);
  const AdiabaticProblem same = build_problem(PureState::basis(3, 0), PureState::basis(3, 0),
                                              IdenticalPolicy::kAllow);
  for (double s : {0.0, 0.3, 1.0}) EXPECT_EQ(matrix_element(same, s, 2.0), 0.0);
  for (double a : {0.1, 0.5, 0.9}) {
    const AdiabaticProblem p = random_problem(4, a, rng);
    EXPECT_NEAR(matrix_element(p, 0.5, -3.0), 3.0 * std::sqrt(1 - a * a), 1e-12);
  }
}

TEST(MatrixElementTest, EigenvectorFormAndFiniteDifferenceOracle) {
  Rng rng(33);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  for (int trial = 0; trial < 10; ++trial) {
    const AdiabaticProblem p = random_problem(5, unit(rng), rng);
    for (int k = 1; k <= 99; k += 7) {
      const double s = 0.01 * k;
      const double closed = matrix_element(p, s, 1.0);
      EXPECT_NEAR(closed, matrix_element_from_eigenvectors(p, s, 1.0), 1e-9);
      EXPECT_NEAR(closed, finite_difference_matrix_element(p, s), 1e-6);
      EXPECT_LE(closed, 1.0 + 1e-12);
    }
  }
  EXPECT_THROW(matrix_element_from_eigenvectors(effective_problem(0.5, 2), 0.0, 1.0),
               InvalidArgument);
}

TEST(MatrixElementTest, BoundedByRate) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Rng rng(34);
  for (int trial = 0; trial < 2000; ++trial) {
    const AdiabaticProblem p = effective_problem(0.001 + 0.998 * unit(rng), 16);
    const double v = 10.0 * (unit(rng) - 0.5);
    EXPECT_LE(matrix_element(p, unit(rng), v), std::abs(v) + 1e-12);
  }
}

TEST(MinGapTest, ClosedFormAndGridOracle) {
  EXPECT_NEAR(min_gap(grover_problem_effective(4)), 0.5, 1e-15);
  EXPECT_EQ(min_gap(effective_problem(1.0, 2)), 1.0);
  Rng rng(35);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  for (int trial = 0; trial < 10; ++trial) {
    const AdiabaticProblem p = effective_problem(unit(rng), 8);
    double grid_min = 1.0;
    for (int k = 0; k <= 10000; ++k) grid_min = std::min(grid_min, gap(p.a(), k / 10000.0));
    EXPECT_NEAR(min_gap(p), grid_min, 1e-8);
  }
}

TEST(EffectiveProblemTest, LargeGroverWithoutStates) {
  const AdiabaticProblem p = grover_problem_effective(std::size_t{1} << 20);
  EXPECT_FALSE(p.has_states());
  EXPECT_NEAR(p.a(), 1.0 / 1024.0, 1e-18);
  EXPECT_THROW(p.alpha(), InvalidArgument);
  EXPECT_THROW(effective_problem(0.0, 4), OrthogonalStates);
}

}  // namespace
}  // namespace adiabatic
