#include "adiabatic/applications.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include "adiabatic/errors.hpp"

namespace adiabatic {

const char* to_string(Promise promise) {
  return promise == Promise::kConstant ? "constant" : "balanced";
}

BooleanFunctionSpec BooleanFunctionSpec::from_bits(std::string_view bits) {
  if (bits.size() < 2 || !std::has_single_bit(bits.size())) {
    throw InvalidArgument("truth table length must be a power of two >= 2, got " +
                          std::to_string(bits.size()));
  }
  BooleanFunctionSpec spec;
  spec.n = static_cast<unsigned>(std::countr_zero(bits.size()));
  spec.truth_table.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("truth table must contain only 0 and 1");
    spec.truth_table.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return spec;
}

Promise BooleanFunctionSpec::classify() const {
  if (n == 0 || n >= 8 * sizeof(std::size_t) || truth_table.size() != (std::size_t{1} << n)) {
    throw InvalidArgument("truth table length must be 2^n");
  }
  std::size_t ones = 0;
  for (std::uint8_t bit : truth_table) {
    if (bit > 1) throw InvalidArgument("truth table entries must be 0 or 1");
    ones += bit;
  }
  if (ones == 0 || ones == truth_table.size()) return Promise::kConstant;
  if (2 * ones == truth_table.size()) return Promise::kBalanced;
  throw NotPromised("function is neither constant nor balanced (" + std::to_string(ones) +
                    " ones out of " + std::to_string(truth_table.size()) + ")");
}

StatePair grover_instance(std::size_t N, std::size_t marked) {
  if (N < 2) throw InvalidArgument("Grover search needs N >= 2");
  if (marked < 1 || marked > N) throw InvalidArgument("marked item must lie in 1..N");
  return {PureState::uniform(N), PureState::basis(N, marked - 1)};
}

AdiabaticProblem grover_problem_effective(std::size_t N) {
  if (N < 2) throw InvalidArgument("Grover search needs N >= 2");
  return effective_problem(Complex(1.0 / std::sqrt(static_cast<double>(N))), N);
}

DeutschJozsaInstance deutsch_jozsa_instance(const BooleanFunctionSpec& f) {
  const Promise promise = f.classify();
  const std::size_t N = f.size();
  long long signed_sum = 0;
  for (std::uint8_t bit : f.truth_table) signed_sum += bit ? -1 : 1;
  const double mu = static_cast<double>(std::llabs(signed_sum)) / static_cast<double>(N);
  const double nu = 1.0 - mu;

  Vector beta(static_cast<Eigen::Index>(N));
  beta(0) = mu;
  const double tail = nu / std::sqrt(static_cast<double>(N - 1));
  for (Eigen::Index i = 1; i < beta.size(); ++i) beta(i) = tail;
  return DeutschJozsaInstance{PureState::uniform(N), PureState(std::move(beta)), promise, mu, nu};
}

RuntimeReport predicted_runtime(const StatePair& states, double epsilon) {
  return runtime_pure(states.first, states.second, epsilon);
}

}  // namespace adiabatic
