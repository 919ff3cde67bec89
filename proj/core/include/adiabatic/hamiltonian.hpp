#pragma once

#include <cstddef>
#include <optional>

#include "adiabatic/states.hpp"

namespace adiabatic {

/// Overlaps at or below this count as orthogonal, at or above 1 minus it
/// as identical.
inline constexpr double kDegeneracyThreshold = 1e-12;

enum class IdenticalPolicy {
  kReject,  // throw IdenticalStates when |<alpha|beta>| ~ 1
  kAllow,   // build a degenerate problem with a = 1, c = 0
};

/// The pair (alpha, beta) reduced to the two-dimensional subspace spanned by
/// |1> = alpha and the Gram-Schmidt partner |2> = (beta - <alpha|beta> alpha)/c.
///
/// Problems built from an overlap alone (see effective_problem) carry no
/// state vectors and only support the effective two-level machinery.
class AdiabaticProblem {
 public:
  std::size_t dim() const { return dim_; }
  Complex overlap() const { return overlap_; }
  double a() const { return a_; }
  double c() const { return c_; }
  /// overlap / a, or 1 when a vanishes.
  Complex phase() const;
  bool identical() const { return a_ >= 1.0 - kDegeneracyThreshold; }
  bool has_states() const { return alpha_.has_value(); }

  const PureState& alpha() const;
  const PureState& beta() const;
  /// Throws InvalidArgument for identical or effective-only problems.
  const PureState& basis2() const;

  /// beta expressed in the {|1>, |2>} basis: (<alpha|beta>, c).
  Eigen::Vector2cd beta_effective() const;

  /// Maps a two-component vector in the {|1>, |2>} basis to the full space.
  Vector lift(const Eigen::Vector2cd& v) const;

 private:
  friend AdiabaticProblem build_problem(const PureState&, const PureState&,
                                        IdenticalPolicy);
  friend AdiabaticProblem effective_problem(Complex, std::size_t);

  AdiabaticProblem() = default;

  std::size_t dim_ = 0;
  Complex overlap_{};
  double a_ = 0.0;
  double c_ = 0.0;
  std::optional<PureState> alpha_;
  std::optional<PureState> beta_;
  std::optional<PureState> basis2_;
};

struct SpectrumPoint {
  double s;
  double e0;
  double e1;
  double gap;
  double y0;  // ground eigenvector (|1> + y0 |2>)/sqrt(1 + y0^2), phase-free
  double y1;  // excited; -infinity in the s -> 0+ limit
};

/// Throws OrthogonalStates when a <= 1e-12 and, under kReject,
/// IdenticalStates when a >= 1 - 1e-12.
AdiabaticProblem build_problem(const PureState& alpha, const PureState& beta,
                               IdenticalPolicy policy = IdenticalPolicy::kReject);

/// Effective-only problem for Hilbert spaces too large to materialize, e.g.
/// Grover search over 2^20 items. The overlap must be nonzero.
AdiabaticProblem effective_problem(Complex overlap, std::size_t dim);

/// (1 - s)(I - |alpha><alpha|) + s(I - |beta><beta|).
Matrix hamiltonian_full(const AdiabaticProblem& problem, double s);

/// Upper-left block of H(s) in the {|1>, |2>} basis:
///   [[ s - s a^2,        -s c <a|b>  ],
///    [ -s c <a|b>^*,      1 - s c^2  ]]
/// The remaining dim - 2 directions carry the identity.
Eigen::Matrix2cd hamiltonian_effective(const AdiabaticProblem& problem, double s);

/// g(s) = sqrt(1 - 4 (1 - a^2) s (1 - s)).
double gap(double a, double s);

/// Closed-form E0, E1, gap and eigenvector coefficients.
SpectrumPoint spectrum(const AdiabaticProblem& problem, double s);

/// Columns are the ground and first excited eigenvectors of
/// hamiltonian_effective, including the overlap phase on the |2> component.
/// At s = 0 this is the continuity limit (|1>, |2>).
Eigen::Matrix2cd effective_eigenvectors(const AdiabaticProblem& problem, double s);

/// Instantaneous ground state in the full space.
Vector ground_state(const AdiabaticProblem& problem, double s);

/// |<E1|dH/dt|E0>| = |ds/dt| a sqrt(1 - a^2) / g(s).
double matrix_element(const AdiabaticProblem& problem, double s, double ds_dt);

/// The same quantity through the eigenvector coefficients,
/// |ds/dt| / (s sqrt((1 + y0^2)(1 + y1^2))). Requires s > 0.
double matrix_element_from_eigenvectors(const AdiabaticProblem& problem,
                                        double s, double ds_dt);

/// Minimum of g over [0, 1]; attained at s = 1/2 with value a.
double min_gap(const AdiabaticProblem& problem);

}  // namespace adiabatic
