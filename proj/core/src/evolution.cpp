#include "adiabatic/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adiabatic/errors.hpp"

namespace adiabatic {
namespace {

// Fourth-order commutator-free exponential integrator on the two Gauss
// nodes of each step:
//   psi <- exp(-i h (w_lo H1 + w_hi H2)) exp(-i h (w_hi H1 + w_lo H2)) psi.
const double kRoot3 = std::sqrt(3.0);
const double kNode1 = 0.5 - kRoot3 / 6.0;
const double kNode2 = 0.5 + kRoot3 / 6.0;
const double kWeightHi = 0.25 + kRoot3 / 6.0;
const double kWeightLo = 0.25 - kRoot3 / 6.0;

struct GridPoint {
  double t;
  bool sample;
};

std::vector<GridPoint> build_grid(const Schedule& schedule, const IntegratorConfig& config) {
  config.validate();
  const double total = schedule.total_time();
  const std::size_t n = config.samples;
  std::vector<GridPoint> grid{{0.0, true}};
  double t = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    const double target = k + 1 == n ? total
                                     : total * static_cast<double>(k) / static_cast<double>(n - 1);
    const double snap = 1e-12 * std::max(1.0, total);
    while (target - t > snap) {
      double h = std::min(config.max_step, target - t);
      const double s0 = schedule.s_at(t);
      while (schedule.s_at(t + h) - s0 > config.max_ds) h *= 0.5;
      t = target - (t + h) <= snap ? target : t + h;
      grid.push_back({t, t == target});
    }
    if (grid.back().t != target) grid.push_back({target, true});
    t = target;
  }
  return grid;
}

void check_consistency(const AdiabaticProblem& problem, const Schedule& schedule) {
  if (schedule.kind() == ScheduleKind::kLocal &&
      std::abs(schedule.a() - problem.a()) > 1e-9) {
    throw InvalidArgument("local schedule was built for a different overlap");
  }
}

double renormalize(Eigen::Ref<Vector> psi, double tolerance, double& defect) {
  const double norm = psi.norm();
  const double step_defect = std::abs(norm - 1.0);
  if (!(step_defect <= tolerance)) {
    throw StepTooLarge("unitarity defect " + std::to_string(step_defect) +
                       " exceeds tolerance");
  }
  defect = std::max(defect, step_defect);
  psi /= norm;
  return norm;
}

// exp(-i h A) for a 2x2 Hermitian A = m0 I + m . sigma.
Eigen::Matrix2cd propagator_2x2(const Eigen::Matrix2cd& h, double time) {
  const double m0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
  const double mz = 0.5 * (h(0, 0).real() - h(1, 1).real());
  const Complex off = h(0, 1);  // mx - i my
  const double m = std::sqrt(mz * mz + std::norm(off));
  const double theta = time * m;
  const double cos_t = std::cos(theta);
  // sin(theta)/m, finite as m -> 0
  const double sinc = m > 0.0 ? std::sin(theta) / m : time;
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd u;
  u(0, 0) = cos_t - i * sinc * mz;
  u(1, 1) = cos_t + i * sinc * mz;
  u(0, 1) = -i * sinc * off;
  u(1, 0) = -i * sinc * std::conj(off);
  return std::polar(1.0, -time * m0) * u;
}

template <typename Space>
EvolutionResult integrate(const Schedule& schedule, const IntegratorConfig& config,
                          Space& space) {
  const std::vector<GridPoint> grid = build_grid(schedule, config);
  EvolutionResult result{space.initial_state(), Space::kRepresentation, 0.0, {}, 0.0,
                         schedule.total_time()};
  Vector psi = result.final_state.amplitudes();
  result.trajectory.reserve(config.samples);
  result.trajectory.push_back({0.0, 0.0, space.ground_overlap_sq(0.0, psi)});

  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double t0 = grid[k - 1].t;
    const double h = grid[k].t - t0;
    const double s1 = schedule.s_at(t0 + kNode1 * h);
    const double s2 = schedule.s_at(t0 + kNode2 * h);
    psi = space.step(s1, s2, h, psi);
    renormalize(psi, config.renorm_tolerance, result.unitarity_defect);
    if (grid[k].sample) {
      const double s = schedule.s_at(grid[k].t);
      result.trajectory.push_back({grid[k].t, s, space.ground_overlap_sq(s, psi)});
    }
  }
  result.final_state = PureState(std::move(psi));
  result.success_probability = space.success_probability(result.final_state.amplitudes());
  return result;
}

class FullSpace {
 public:
  static constexpr Representation kRepresentation = Representation::kFull;
  explicit FullSpace(const AdiabaticProblem& problem) : problem_(problem) {}

  PureState initial_state() const { return problem_.alpha(); }

  Vector step(double s1, double s2, double h, const Vector& psi) const {
    const Matrix h1 = hamiltonian_full(problem_, s1);
    const Matrix h2 = hamiltonian_full(problem_, s2);
    Vector out = unitary_propagator(kWeightHi * h1 + kWeightLo * h2, h) * psi;
    return unitary_propagator(kWeightLo * h1 + kWeightHi * h2, h) * out;
  }

  double ground_overlap_sq(double s, const Vector& psi) const {
    return std::norm(ground_state(problem_, s).dot(psi));
  }

  double success_probability(const Vector& psi) const {
    return std::norm(problem_.beta().amplitudes().dot(psi));
  }

 private:
  const AdiabaticProblem& problem_;
};

class EffectiveSpace {
 public:
  static constexpr Representation kRepresentation = Representation::kEffective;
  explicit EffectiveSpace(const AdiabaticProblem& problem) : problem_(problem) {}

  PureState initial_state() const { return PureState::basis(2, 0); }

  Vector step(double s1, double s2, double h, const Vector& psi) const {
    const Eigen::Matrix2cd h1 = hamiltonian_effective(problem_, s1);
    const Eigen::Matrix2cd h2 = hamiltonian_effective(problem_, s2);
    Eigen::Vector2cd v = psi;
    v = propagator_2x2(kWeightHi * h1 + kWeightLo * h2, h) * v;
    v = propagator_2x2(kWeightLo * h1 + kWeightHi * h2, h) * v;
    return v;
  }

  double ground_overlap_sq(double s, const Vector& psi) const {
    return std::norm(effective_eigenvectors(problem_, s).col(0).dot(psi));
  }

  double success_probability(const Vector& psi) const {
    return std::norm(problem_.beta_effective().dot(psi));
  }

 private:
  const AdiabaticProblem& problem_;
};

EvolutionResult zero_time_result(const AdiabaticProblem& problem, Integrator integrator) {
  const bool full = integrator == Integrator::kFull;
  PureState state = full ? problem.alpha() : PureState::basis(2, 0);
  const double success = full ? std::norm(problem.beta().inner(problem.alpha()))
                              : std::norm(problem.overlap());
  return EvolutionResult{std::move(state),
                         full ? Representation::kFull : Representation::kEffective,
                         success,
                         {{0.0, 0.0, 1.0}, {0.0, 1.0, 1.0}},
                         0.0,
                         0.0};
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(max_step > 0.0) || !std::isfinite(max_step)) {
    throw InvalidArgument("max_step must be positive");
  }
  if (samples < 2) throw InvalidArgument("samples must be at least 2");
  if (!(renorm_tolerance > 0.0 && renorm_tolerance <= 1e-6)) {
    throw InvalidArgument("renorm_tolerance must lie in (0, 1e-6]");
  }
  if (!(max_ds > 0.0 && max_ds <= 1.0)) throw InvalidArgument("max_ds must lie in (0, 1]");
}

std::vector<double> time_grid(const Schedule& schedule, const IntegratorConfig& config) {
  std::vector<double> times;
  for (const GridPoint& p : build_grid(schedule, config)) times.push_back(p.t);
  return times;
}

EvolutionResult evolve(const AdiabaticProblem& problem, const Schedule& schedule,
                       const IntegratorConfig& config) {
  check_consistency(problem, schedule);
  FullSpace space(problem);
  return integrate(schedule, config, space);
}

EvolutionResult evolve_effective(const AdiabaticProblem& problem, const Schedule& schedule,
                                 const IntegratorConfig& config) {
  check_consistency(problem, schedule);
  EffectiveSpace space(problem);
  return integrate(schedule, config, space);
}

EvolutionResult evolve_local(const AdiabaticProblem& problem, double epsilon,
                             const IntegratorConfig& config, Integrator integrator) {
  validate_epsilon(epsilon);
  config.validate();
  if (problem.identical()) return zero_time_result(problem, integrator);
  const Schedule schedule = local_schedule(problem.a(), epsilon);
  return integrator == Integrator::kFull ? evolve(problem, schedule, config)
                                         : evolve_effective(problem, schedule, config);
}

std::vector<SweepRow> error_scaling_sweep(const AdiabaticProblem& problem,
                                          const std::vector<double>& epsilons,
                                          const IntegratorConfig& config,
                                          Integrator integrator) {
  if (epsilons.empty()) throw InvalidArgument("epsilon list is empty");
  std::vector<SweepRow> rows;
  rows.reserve(epsilons.size());
  for (double epsilon : epsilons) {
    const EvolutionResult result = evolve_local(problem, epsilon, config, integrator);
    rows.push_back({epsilon, result.total_time,
                    std::max(0.0, 1.0 - result.success_probability)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SweepRow& x, const SweepRow& y) { return x.epsilon > y.epsilon; });
  return rows;
}

}  // namespace adiabatic
