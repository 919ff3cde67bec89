#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adiabatic/evolution.hpp"
#include "adiabatic/schedule.hpp"
#include "adiabatic/states.hpp"

namespace adiabatic {

// State files: {"dim": n, "re": [...], "im": [...]}. Pure states carry n
// entries, density matrices n*n in row-major order.

nlohmann::json to_json(const PureState& state);
nlohmann::json to_json(const DensityMatrix& rho);
nlohmann::json to_json(const RuntimeReport& report);
/// {success_probability, T, epsilon, unitarity_defect}
nlohmann::json to_json(const EvolutionResult& result, double epsilon);

/// Throws InvalidArgument on schema or invariant violations.
PureState pure_state_from_json(const nlohmann::json& j);
/// Accepts either layout; pure states become projectors.
DensityMatrix density_matrix_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);

/// Formats with 17 significant digits.
std::string format_double(double value);

/// Header `t,s,gap,ds_dt`.
void write_schedule_csv(std::ostream& out, const std::vector<ScheduleSample>& samples);
/// Header `t,s,ground_overlap_sq`.
void write_trajectory_csv(std::ostream& out, const std::vector<TrajectorySample>& samples);

}  // namespace adiabatic
