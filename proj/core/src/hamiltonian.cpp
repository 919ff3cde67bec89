#include "adiabatic/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adiabatic/errors.hpp"

namespace adiabatic {
namespace {

void require_unit_interval(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw InvalidArgument("s must lie in [0, 1]");
}

// 1 - a^2 without cancellation near a = 1.
double complement_sq(double a) { return (1.0 - a) * (1.0 + a); }

// Ground-state coefficient y0 = 2 a b s / (a^2 - b^2 u + g), u = 2s - 1.
// The denominator is rewritten for u > 0 so no term cancels.
double ground_coefficient(double a, double s) {
  const double b2 = complement_sq(a);
  const double b = std::sqrt(b2);
  const double u = 2.0 * s - 1.0;
  const double g = gap(a, s);
  double denom;
  if (u <= 0.0) {
    denom = a * a - b2 * u + g;
  } else {
    denom = a * a + a * a * (1.0 + b2 * u * u) / (g + b2 * u);
  }
  return 2.0 * a * b * s / denom;
}

}  // namespace

Complex AdiabaticProblem::phase() const {
  return a_ > 0.0 ? overlap_ / a_ : Complex(1.0);
}

const PureState& AdiabaticProblem::alpha() const {
  if (!alpha_) throw InvalidArgument("problem was built from an overlap only");
  return *alpha_;
}

const PureState& AdiabaticProblem::beta() const {
  if (!beta_) throw InvalidArgument("problem was built from an overlap only");
  return *beta_;
}

const PureState& AdiabaticProblem::basis2() const {
  if (!basis2_) {
    throw InvalidArgument("no Gram-Schmidt partner: states are identical or absent");
  }
  return *basis2_;
}

Eigen::Vector2cd AdiabaticProblem::beta_effective() const {
  return Eigen::Vector2cd(overlap_, Complex(c_));
}

Vector AdiabaticProblem::lift(const Eigen::Vector2cd& v) const {
  Vector out = v(0) * alpha().amplitudes();
  if (basis2_) {
    out += v(1) * basis2_->amplitudes();
  } else if (std::abs(v(1)) > 0.0) {
    throw InvalidArgument("cannot lift a |2> component for identical states");
  }
  return out;
}

AdiabaticProblem build_problem(const PureState& alpha, const PureState& beta,
                               IdenticalPolicy policy) {
  if (alpha.dim() != beta.dim()) throw DimensionMismatch(alpha.dim(), beta.dim());
  const Complex overlap = alpha.inner(beta);
  const double a = std::min(std::abs(overlap), 1.0);
  if (a <= kDegeneracyThreshold) throw OrthogonalStates();

  AdiabaticProblem problem;
  problem.dim_ = alpha.dim();
  problem.alpha_ = alpha;
  problem.beta_ = beta;
  if (a >= 1.0 - kDegeneracyThreshold) {
    if (policy == IdenticalPolicy::kReject) throw IdenticalStates();
    problem.a_ = 1.0;
    problem.c_ = 0.0;
    problem.overlap_ = overlap / std::abs(overlap);
    return problem;
  }

  Vector residual = beta.amplitudes() - overlap * alpha.amplitudes();
  const double c = residual.norm();
  problem.overlap_ = overlap;
  problem.a_ = a;
  problem.c_ = c;
  problem.basis2_ = PureState::normalized(std::move(residual));
  return problem;
}

AdiabaticProblem effective_problem(Complex overlap, std::size_t dim) {
  if (dim < 2) throw InvalidArgument("dimension must be at least 2");
  const double a = std::abs(overlap);
  if (!std::isfinite(a) || a > 1.0 + kDegeneracyThreshold) {
    throw InvalidArgument("overlap modulus must lie in [0, 1]");
  }
  if (a <= kDegeneracyThreshold) throw OrthogonalStates();

  AdiabaticProblem problem;
  problem.dim_ = dim;
  if (a >= 1.0 - kDegeneracyThreshold) {
    problem.a_ = 1.0;
    problem.c_ = 0.0;
    problem.overlap_ = overlap / a;
  } else {
    problem.a_ = a;
    problem.c_ = std::sqrt(complement_sq(a));
    problem.overlap_ = overlap;
  }
  return problem;
}

Matrix hamiltonian_full(const AdiabaticProblem& problem, double s) {
  require_unit_interval(s);
  const Vector& alpha = problem.alpha().amplitudes();
  const Vector& beta = problem.beta().amplitudes();
  const auto n = static_cast<Eigen::Index>(problem.dim());
  Matrix h = Matrix::Identity(n, n);
  h -= (1.0 - s) * (alpha * alpha.adjoint());
  h -= s * (beta * beta.adjoint());
  return 0.5 * (h + h.adjoint());
}

Eigen::Matrix2cd hamiltonian_effective(const AdiabaticProblem& problem, double s) {
  require_unit_interval(s);
  const Complex o = problem.overlap();
  const double a = problem.a();
  const double c = problem.c();
  Eigen::Matrix2cd h;
  h(0, 0) = -s * a * a + s;
  h(0, 1) = -s * c * o;
  h(1, 0) = -s * c * std::conj(o);
  h(1, 1) = -s * c * c + 1.0;
  return h;
}

double gap(double a, double s) {
  const double u = 2.0 * s - 1.0;
  return std::sqrt(a * a + complement_sq(a) * u * u);
}

SpectrumPoint spectrum(const AdiabaticProblem& problem, double s) {
  require_unit_interval(s);
  const double a = problem.a();
  const double b2 = complement_sq(a);
  const double g = gap(a, s);

  SpectrumPoint p{};
  p.s = s;
  p.gap = g;
  p.e0 = 2.0 * b2 * s * (1.0 - s) / (1.0 + g);
  p.e1 = 0.5 * (1.0 + g);
  p.y0 = ground_coefficient(a, s);
  p.y1 = p.y0 > 0.0 ? -1.0 / p.y0 : -std::numeric_limits<double>::infinity();
  return p;
}

Eigen::Matrix2cd effective_eigenvectors(const AdiabaticProblem& problem, double s) {
  require_unit_interval(s);
  const double y0 = ground_coefficient(problem.a(), s);
  const Complex phase = problem.phase();
  const double norm = std::sqrt(1.0 + y0 * y0);
  Eigen::Matrix2cd v;
  v(0, 0) = 1.0 / norm;
  v(1, 0) = y0 * std::conj(phase) / norm;
  v(0, 1) = -y0 * phase / norm;
  v(1, 1) = 1.0 / norm;
  return v;
}

Vector ground_state(const AdiabaticProblem& problem, double s) {
  if (problem.identical()) return problem.alpha().amplitudes();
  return problem.lift(effective_eigenvectors(problem, s).col(0));
}

double matrix_element(const AdiabaticProblem& problem, double s, double ds_dt) {
  require_unit_interval(s);
  const double a = problem.a();
  return std::abs(ds_dt) * a * std::sqrt(complement_sq(a)) / gap(a, s);
}

double matrix_element_from_eigenvectors(const AdiabaticProblem& problem, double s,
                                        double ds_dt) {
  require_unit_interval(s);
  if (s <= 0.0) throw InvalidArgument("eigenvector form requires s > 0");
  const SpectrumPoint p = spectrum(problem, s);
  if (!std::isfinite(p.y1)) return 0.0;
  return std::abs(ds_dt) / (s * std::sqrt((1.0 + p.y0 * p.y0) * (1.0 + p.y1 * p.y1)));
}

double min_gap(const AdiabaticProblem& problem) { return problem.a(); }

}  // namespace adiabatic
