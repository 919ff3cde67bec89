#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "adiabatic/hamiltonian.hpp"
#include "adiabatic/states.hpp"

namespace adiabatic {

enum class ScheduleKind { kLinear, kLocal };

/// Monotone interpolation s(t) on [0, T] with s(0) = 0 and s(T) = 1.
///
/// The local schedule saturates the instantaneous adiabatic condition,
///   ds/dt = eps (1 - 4 (1 - a^2) s (1 - s))^{3/2} / (a sqrt(1 - a^2)),
/// whose antiderivative is available in closed form. With u = 2s - 1 and
/// b = sqrt(1 - a^2),
///   t(s) = (a b / 2 eps) (u / (a^2 sqrt(a^2 + b^2 u^2)) + 1 / a^2).
/// s(t) inverts this map.
class Schedule {
 public:
  ScheduleKind kind() const { return kind_; }
  double total_time() const { return total_time_; }
  /// Overlap modulus the schedule was built for (local kind only).
  double a() const { return a_; }
  /// Precision parameter (local kind only).
  double epsilon() const { return epsilon_; }

  /// s(t); t is clamped to [0, T].
  double s_at(double t) const;
  /// t(s); s is clamped to [0, 1].
  double t_at(double s) const;
  /// ds/dt at the instant where the schedule reaches s.
  double rate_at_s(double s) const;
  double rate_at(double t) const { return rate_at_s(s_at(t)); }

 private:
  friend Schedule local_schedule(double a, double epsilon);
  friend Schedule linear_schedule(double total_time);

  Schedule() = default;

  ScheduleKind kind_ = ScheduleKind::kLinear;
  double total_time_ = 0.0;
  double a_ = 0.0;
  double epsilon_ = 0.0;
};

struct RuntimeReport {
  double T;
  double fidelity;
  double angle;
  double epsilon;
  /// Trace distance between the two states; T * eps = D / F for pure states.
  double trace_distance_form;
};

struct AdiabaticityReport {
  double max_violation;  // max over the grid of |ds/dt| a b / g - eps g^2
  double t_at_max;
  double s_at_max;
  double d_max;          // max |<E1|dH/dt|E0>| over the grid
  double g_min;          // min gap over the grid
  bool satisfied;        // max_violation <= kAdiabaticitySlack
};

struct ScheduleSample {
  double t;
  double s;
  double gap;
  double ds_dt;
};

inline constexpr double kAdiabaticitySlack = 1e-8;

/// Throws InvalidEpsilon outside (0, 1].
void validate_epsilon(double epsilon);

/// Local adiabatic schedule with total time sqrt(1 - a^2) / (eps a).
/// Throws OrthogonalStates for a <= 1e-12 and IdenticalStates for
/// a >= 1 - 1e-12.
Schedule local_schedule(double a, double epsilon);

/// s(t) = t / T. Throws InvalidArgument for T <= 0.
Schedule linear_schedule(double total_time);

/// Minimal local-adiabatic runtime (1/eps) tan(arccos |<alpha|beta>|).
/// Identical states give T = 0; orthogonal states throw OrthogonalStates.
RuntimeReport runtime_pure(const PureState& alpha, const PureState& beta,
                           double epsilon);

/// Same relation from a fidelity value alone, with the pure-state trace
/// distance sqrt(1 - F^2).
RuntimeReport runtime_from_fidelity(double fidelity, double epsilon);

/// (1/eps) tan(arccos F(rho, sigma)).
RuntimeReport runtime_mixed(const DensityMatrix& rho, const DensityMatrix& sigma,
                            double epsilon);

/// Minimum of runtime_pure over `budget` sampled purification pairs (same
/// sampling as uhlmann_fidelity). Never below runtime_mixed.
double runtime_mixed_by_purification(const DensityMatrix& rho,
                                     const DensityMatrix& sigma, double epsilon,
                                     std::size_t budget,
                                     std::uint64_t seed = kDefaultSeed);

/// Evaluates the instantaneous adiabatic condition on a uniform t grid.
AdiabaticityReport check_adiabaticity(const AdiabaticProblem& problem,
                                      const Schedule& schedule, double epsilon,
                                      std::size_t grid_points);

/// Uniform t samples of (t, s, g(s), ds/dt) for an overlap modulus a.
std::vector<ScheduleSample> sample_schedule(const Schedule& schedule, double a,
                                            std::size_t points);

}  // namespace adiabatic
