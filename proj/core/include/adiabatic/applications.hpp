#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "adiabatic/hamiltonian.hpp"
#include "adiabatic/schedule.hpp"
#include "adiabatic/states.hpp"

namespace adiabatic {

using StatePair = std::pair<PureState, PureState>;

enum class Promise { kConstant, kBalanced };

const char* to_string(Promise promise);

/// f : {0,1}^n -> {0,1} as a truth table indexed by x.
struct BooleanFunctionSpec {
  unsigned n = 0;
  std::vector<std::uint8_t> truth_table;

  /// Parses a string of '0'/'1' whose length must be a power of two >= 2.
  static BooleanFunctionSpec from_bits(std::string_view bits);

  std::size_t size() const { return truth_table.size(); }
  /// Throws NotPromised unless the table is constant or balanced.
  Promise classify() const;
};

struct DeutschJozsaInstance {
  PureState alpha;
  PureState beta;
  Promise classification;
  double mu;
  double nu;
};

/// Uniform superposition over N items and the marked item |m>. `marked` is
/// 1-based (m in 1..N); the returned states use 0-based amplitudes.
StatePair grover_instance(std::size_t N, std::size_t marked);

/// Grover search as an effective-only problem with a = 1/sqrt(N).
AdiabaticProblem grover_problem_effective(std::size_t N);

/// alpha uniform over N = 2^n; beta = mu |0> + nu/sqrt(N-1) sum_{i>=1} |i>
/// with mu = |sum_x (-1)^f(x)| / N and nu = 1 - mu.
DeutschJozsaInstance deutsch_jozsa_instance(const BooleanFunctionSpec& f);

RuntimeReport predicted_runtime(const StatePair& states, double epsilon);

}  // namespace adiabatic
