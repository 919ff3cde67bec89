#include "adiabatic/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adiabatic/errors.hpp"
#include "purification_sampling.hpp"

namespace adiabatic {
namespace {

double complement(double a) { return std::sqrt((1.0 - a) * (1.0 + a)); }

RuntimeReport runtime_report(double fidelity, double epsilon, double trace_distance) {
  if (fidelity <= kDegeneracyThreshold) throw OrthogonalStates();
  RuntimeReport report{};
  report.fidelity = fidelity;
  report.epsilon = epsilon;
  report.angle = std::acos(fidelity);
  report.trace_distance_form = trace_distance;
  report.T = fidelity >= 1.0 - kDegeneracyThreshold
                 ? 0.0
                 : complement(fidelity) / (epsilon * fidelity);
  return report;
}

// Closed-form inverse of the local schedule's t(s) for t <= T/2. With
// q = 2 eps a t / b - 1 in [-1, 0] the relation u / g(u) = q gives
// u = q a / sqrt(1 - q^2 b^2); both 1 + u and 1 - q^2 b^2 are expanded so
// nothing cancels near the endpoints.
double local_inverse_left(double a, double epsilon, double t) {
  const double b = complement(a);
  const double r = 2.0 * epsilon * a * t / b;  // 1 - |q|
  const double q_abs = std::max(0.0, 1.0 - r);
  const double d = (r + q_abs * a * a / (1.0 + b)) * (1.0 + q_abs * b);
  const double root = std::sqrt(d);
  return r * (1.0 + q_abs) / (2.0 * root * (root + q_abs * a));
}

}  // namespace

void validate_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InvalidEpsilon(epsilon);
}

double Schedule::t_at(double s) const {
  s = std::clamp(s, 0.0, 1.0);
  if (kind_ == ScheduleKind::kLinear) return s * total_time_;
  const double a = a_;
  const double b = complement(a);
  const double u = 2.0 * s - 1.0;
  const double g = gap(a, s);
  if (u <= 0.0) {
    // 1 + u/g = a^2 (1 - u^2) / (g (g - u))
    return 2.0 * a * b * s * (1.0 - s) / (epsilon_ * g * (g - u));
  }
  return b / (2.0 * epsilon_ * a) * (1.0 + u / g);
}

double Schedule::rate_at_s(double s) const {
  s = std::clamp(s, 0.0, 1.0);
  if (kind_ == ScheduleKind::kLinear) return 1.0 / total_time_;
  const double g = gap(a_, s);
  return epsilon_ * g * g * g / (a_ * complement(a_));
}

double Schedule::s_at(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= total_time_) return 1.0;
  if (kind_ == ScheduleKind::kLinear) return t / total_time_;

  double s = 2.0 * t <= total_time_
                 ? local_inverse_left(a_, epsilon_, t)
                 : 1.0 - local_inverse_left(a_, epsilon_, total_time_ - t);

  // Safeguarded Newton polish on t(s) - t; t(s) is strictly increasing.
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 16; ++iter) {
    const double residual = t_at(s) - t;
    if (residual == 0.0) break;
    const double correction = residual * rate_at_s(s);
    if (std::abs(correction) <= 1e-15) {
      s -= correction;
      break;
    }
    if (residual > 0.0) hi = std::min(hi, s); else lo = std::max(lo, s);
    double next = s - correction;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    s = next;
  }
  return s;
}

Schedule local_schedule(double a, double epsilon) {
  validate_epsilon(epsilon);
  if (!std::isfinite(a) || a > 1.0) throw InvalidArgument("overlap modulus must lie in (0, 1)");
  if (a <= kDegeneracyThreshold) throw OrthogonalStates();
  if (a >= 1.0 - kDegeneracyThreshold) throw IdenticalStates();
  Schedule schedule;
  schedule.kind_ = ScheduleKind::kLocal;
  schedule.a_ = a;
  schedule.epsilon_ = epsilon;
  schedule.total_time_ = complement(a) / (epsilon * a);
  return schedule;
}

Schedule linear_schedule(double total_time) {
  if (!(total_time > 0.0) || !std::isfinite(total_time)) {
    throw InvalidArgument("linear schedule needs a positive finite runtime");
  }
  Schedule schedule;
  schedule.kind_ = ScheduleKind::kLinear;
  schedule.total_time_ = total_time;
  return schedule;
}

RuntimeReport runtime_pure(const PureState& alpha, const PureState& beta, double epsilon) {
  validate_epsilon(epsilon);
  return runtime_report(fidelity_pure(alpha, beta), epsilon, trace_distance_pure(alpha, beta));
}

RuntimeReport runtime_from_fidelity(double fidelity, double epsilon) {
  validate_epsilon(epsilon);
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) throw InvalidArgument("fidelity must lie in [0, 1]");
  return runtime_report(fidelity, epsilon, complement(fidelity));
}

RuntimeReport runtime_mixed(const DensityMatrix& rho, const DensityMatrix& sigma,
                            double epsilon) {
  validate_epsilon(epsilon);
  return runtime_report(fidelity_mixed(rho, sigma), epsilon, trace_distance(rho, sigma));
}

double runtime_mixed_by_purification(const DensityMatrix& rho, const DensityMatrix& sigma,
                                     double epsilon, std::size_t budget,
                                     std::uint64_t seed) {
  validate_epsilon(epsilon);
  if (fidelity_mixed(rho, sigma) <= kDegeneracyThreshold) throw OrthogonalStates();
  double best = std::numeric_limits<double>::infinity();
  detail::for_each_purification_pair(
      rho, sigma, budget, seed, [&](const PureState& psi, const PureState& phi) {
        if (fidelity_pure(psi, phi) <= kDegeneracyThreshold) return;
        best = std::min(best, runtime_pure(psi, phi, epsilon).T);
      });
  return best;
}

AdiabaticityReport check_adiabaticity(const AdiabaticProblem& problem,
                                      const Schedule& schedule, double epsilon,
                                      std::size_t grid_points) {
  validate_epsilon(epsilon);
  if (grid_points < 2) throw InvalidArgument("grid_points must be at least 2");
  AdiabaticityReport report{};
  report.max_violation = -std::numeric_limits<double>::infinity();
  report.g_min = std::numeric_limits<double>::infinity();
  const double total = schedule.total_time();
  const double a = problem.a();
  for (std::size_t k = 0; k < grid_points; ++k) {
    const double t = total * static_cast<double>(k) / static_cast<double>(grid_points - 1);
    const double s = schedule.s_at(t);
    const double g = gap(a, s);
    const double element = matrix_element(problem, s, schedule.rate_at_s(s));
    const double violation = element - epsilon * g * g;
    if (violation > report.max_violation) {
      report.max_violation = violation;
      report.t_at_max = t;
      report.s_at_max = s;
    }
    report.d_max = std::max(report.d_max, element);
    report.g_min = std::min(report.g_min, g);
  }
  report.satisfied = report.max_violation <= kAdiabaticitySlack;
  return report;
}

std::vector<ScheduleSample> sample_schedule(const Schedule& schedule, double a,
                                            std::size_t points) {
  if (points < 2) throw InvalidArgument("need at least 2 schedule samples");
  std::vector<ScheduleSample> samples;
  samples.reserve(points);
  for (std::size_t k = 0; k < points; ++k) {
    const double t = schedule.total_time() * static_cast<double>(k) /
                     static_cast<double>(points - 1);
    const double s = schedule.s_at(t);
    samples.push_back({t, s, gap(a, s), schedule.rate_at_s(s)});
  }
  return samples;
}

}  // namespace adiabatic
