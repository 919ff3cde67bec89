#pragma once

#include <cstddef>
#include <vector>

#include "adiabatic/hamiltonian.hpp"
#include "adiabatic/schedule.hpp"
#include "adiabatic/states.hpp"

namespace adiabatic {

struct IntegratorConfig {
  double max_step = 0.1;            // time units
  std::size_t samples = 101;        // trajectory samples, endpoints included
  double renorm_tolerance = 1e-9;   // allowed | ||psi|| - 1 | per step
  double max_ds = 0.01;             // bound on |s(t + h) - s(t)| per step

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;
};

enum class Representation {
  kFull,       // final_state lives in the problem's dim-dimensional space
  kEffective,  // final_state holds the {|1>, |2>} coordinates
};

enum class Integrator { kFull, kEffective };

struct TrajectorySample {
  double t;
  double s;
  double ground_overlap_sq;  // |<E0(s)|psi(t)>|^2
};

struct EvolutionResult {
  PureState final_state;
  Representation representation;
  double success_probability;  // |<beta|psi(T)>|^2
  std::vector<TrajectorySample> trajectory;
  double unitarity_defect;     // max | ||psi|| - 1 | before renormalization
  double total_time;
};

struct SweepRow {
  double epsilon;
  double T;
  double infidelity;
};

/// Step boundaries on [0, T]: every trajectory sample time is a boundary,
/// steps never exceed max_step, and s advances by at most max_ds per step.
std::vector<double> time_grid(const Schedule& schedule,
                              const IntegratorConfig& config);

/// Propagates |alpha> under H(s(t)) in the full space with a fourth-order
/// commutator-free exponential integrator. Each exponential is a dense
/// Hermitian eigendecomposition.
EvolutionResult evolve(const AdiabaticProblem& problem, const Schedule& schedule,
                       const IntegratorConfig& config = {});

/// Same integrator restricted to the invariant span{|1>, |2>}; the cost is
/// independent of the Hilbert-space dimension.
EvolutionResult evolve_effective(const AdiabaticProblem& problem,
                                 const Schedule& schedule,
                                 const IntegratorConfig& config = {});

/// Builds the local schedule for the problem and evolves under it. Identical
/// states take zero time and report the bare overlap.
EvolutionResult evolve_local(const AdiabaticProblem& problem, double epsilon,
                             const IntegratorConfig& config = {},
                             Integrator integrator = Integrator::kEffective);

/// One row per epsilon, sorted by epsilon descending.
std::vector<SweepRow> error_scaling_sweep(const AdiabaticProblem& problem,
                                          const std::vector<double>& epsilons,
                                          const IntegratorConfig& config = {},
                                          Integrator integrator = Integrator::kEffective);

}  // namespace adiabatic
