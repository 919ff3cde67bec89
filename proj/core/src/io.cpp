#include "adiabatic/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "adiabatic/errors.hpp"

namespace adiabatic {
namespace {

using nlohmann::json;

std::vector<double> read_reals(const json& j, const char* key, std::size_t expected) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw InvalidArgument(std::string("state JSON needs an array \"") + key + "\"");
  }
  std::vector<double> values;
  values.reserve(j.at(key).size());
  for (const json& v : j.at(key)) {
    if (!v.is_number()) throw InvalidArgument(std::string("non-numeric entry in \"") + key + "\"");
    values.push_back(v.get<double>());
  }
  if (values.size() != expected) {
    throw InvalidArgument(std::string("\"") + key + "\" has " + std::to_string(values.size()) +
                          " entries, expected " + std::to_string(expected));
  }
  return values;
}

std::size_t read_dim(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_integer() ||
      j.at("dim").get<long long>() < 1) {
    throw InvalidArgument("state JSON needs a positive integer \"dim\"");
  }
  return j.at("dim").get<std::size_t>();
}

// Number of entries in "re", or 0 when absent.
std::size_t entry_count(const json& j) {
  return j.contains("re") && j.at("re").is_array() ? j.at("re").size() : 0;
}

Vector read_vector(const json& j, std::size_t n) {
  const auto re = read_reals(j, "re", n);
  const auto im = read_reals(j, "im", n);
  Vector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
  return v;
}

}  // namespace

json to_json(const PureState& state) {
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < state.dim(); ++i) {
    re.push_back(state[i].real());
    im.push_back(state[i].imag());
  }
  return json{{"dim", state.dim()}, {"re", re}, {"im", im}};
}

json to_json(const DensityMatrix& rho) {
  json re = json::array();
  json im = json::array();
  const Matrix& m = rho.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return json{{"dim", rho.dim()}, {"re", re}, {"im", im}};
}

json to_json(const RuntimeReport& report) {
  return json{{"T", report.T},
              {"fidelity", report.fidelity},
              {"angle", report.angle},
              {"epsilon", report.epsilon},
              {"trace_distance_form", report.trace_distance_form}};
}

json to_json(const EvolutionResult& result, double epsilon) {
  return json{{"success_probability", result.success_probability},
              {"T", result.total_time},
              {"epsilon", epsilon},
              {"unitarity_defect", result.unitarity_defect}};
}

PureState pure_state_from_json(const json& j) {
  const std::size_t n = read_dim(j);
  if (entry_count(j) != n) {
    throw InvalidArgument("pure state JSON must carry exactly dim amplitudes");
  }
  return PureState(read_vector(j, n));
}

DensityMatrix density_matrix_from_json(const json& j) {
  const std::size_t n = read_dim(j);
  if (entry_count(j) == n && n > 1) return pure_state_from_json(j).projector();
  const Vector flat = read_vector(j, n * n);
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          flat(static_cast<Eigen::Index>(r * n + c));
  return DensityMatrix(std::move(m));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("malformed JSON in " + path + ": " + e.what());
  }
}

std::string format_double(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

void write_schedule_csv(std::ostream& out, const std::vector<ScheduleSample>& samples) {
  out << "t,s,gap,ds_dt\n";
  for (const ScheduleSample& p : samples) {
    out << format_double(p.t) << ',' << format_double(p.s) << ',' << format_double(p.gap)
        << ',' << format_double(p.ds_dt) << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectorySample>& samples) {
  out << "t,s,ground_overlap_sq\n";
  for (const TrajectorySample& p : samples) {
    out << format_double(p.t) << ',' << format_double(p.s) << ','
        << format_double(p.ground_overlap_sq) << '\n';
  }
}

}  // namespace adiabatic
