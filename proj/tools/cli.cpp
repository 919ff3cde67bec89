#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "adiabatic/applications.hpp"
#include "adiabatic/errors.hpp"
#include "adiabatic/evolution.hpp"
#include "adiabatic/io.hpp"
#include "adiabatic/schedule.hpp"

namespace adiabatic::cli {
namespace {

using nlohmann::json;

enum class Format { kJson, kCsv };

struct GlobalOptions {
  double epsilon = 0.1;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  std::string output;

  Format fmt() const { return format == "csv" ? Format::kCsv : Format::kJson; }
};

struct RuntimeOptions {
  std::optional<double> fidelity;
  std::string alpha;
  std::string beta;
};

struct EvolveOptions {
  std::string instance;
  std::optional<unsigned> qubits;
  std::optional<std::size_t> size;
  std::size_t marked = 1;
  std::string table;
  std::string alpha;
  std::string beta;
  std::string schedule = "local";
  std::optional<double> total_time;
  bool effective = false;
  double max_step = IntegratorConfig{}.max_step;
  std::size_t samples = IntegratorConfig{}.samples;
  std::string trajectory;
};

struct SweepOptions {
  std::string axis;
  std::vector<double> values;
  std::optional<double> from;
  std::optional<double> to;
  std::size_t steps = 0;
  std::size_t size = 8;
  bool full = false;
};

struct MixedOptions {
  std::string rho;
  std::string sigma;
  std::size_t budget = 10000;
};

struct ScheduleOptions {
  std::optional<double> fidelity;
  std::string kind = "local";
  std::optional<double> total_time;
  std::size_t points = 101;
};

struct DjOptions {
  std::string table;
};

// Writes a single header + row table from ordered (name, value) pairs.
void write_csv_row(std::ostream& out, const json& object, const std::vector<std::string>& keys) {
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
  out << '\n';
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const json& v = object.at(keys[i]);
    out << (i ? "," : "");
    if (v.is_number_float()) {
      out << format_double(v.get<double>());
    } else if (v.is_string()) {
      out << v.get<std::string>();
    } else {
      out << v.dump();
    }
  }
  out << '\n';
}

void write_table(std::ostream& out, Format format, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) {
  if (format == Format::kJson) {
    json array = json::array();
    for (const auto& row : rows) {
      json object;
      for (std::size_t i = 0; i < header.size(); ++i) object[header[i]] = row[i];
      array.push_back(object);
    }
    out << array.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

const std::vector<std::string> kRuntimeKeys = {"T", "fidelity", "angle", "epsilon",
                                               "trace_distance_form"};

void emit_object(std::ostream& out, Format format, const json& object,
                 const std::vector<std::string>& keys) {
  if (format == Format::kCsv) {
    write_csv_row(out, object, keys);
  } else {
    out << object.dump(2) << '\n';
  }
}

int cmd_runtime(const GlobalOptions& g, const RuntimeOptions& o, std::ostream& out) {
  RuntimeReport report{};
  if (o.fidelity) {
    report = runtime_from_fidelity(*o.fidelity, g.epsilon);
  } else {
    if (o.alpha.empty() || o.beta.empty()) {
      throw InvalidArgument("runtime needs --fidelity or both --alpha and --beta");
    }
    report = runtime_pure(pure_state_from_json(read_json_file(o.alpha)),
                          pure_state_from_json(read_json_file(o.beta)), g.epsilon);
  }
  emit_object(out, g.fmt(), to_json(report), kRuntimeKeys);
  return kOk;
}

AdiabaticProblem evolve_problem(const EvolveOptions& o) {
  if (o.instance == "grover") {
    std::size_t n_items = 0;
    if (o.size) {
      n_items = *o.size;
    } else if (o.qubits) {
      if (*o.qubits == 0 || *o.qubits > 40) throw InvalidArgument("--n must lie in 1..40");
      n_items = std::size_t{1} << *o.qubits;
    } else {
      throw InvalidArgument("grover needs --n (qubits) or --N (items)");
    }
    if (o.effective) return grover_problem_effective(n_items);
    const StatePair states = grover_instance(n_items, o.marked);
    return build_problem(states.first, states.second, IdenticalPolicy::kAllow);
  }
  if (o.instance == "dj") {
    const DeutschJozsaInstance dj = deutsch_jozsa_instance(BooleanFunctionSpec::from_bits(o.table));
    return build_problem(dj.alpha, dj.beta, IdenticalPolicy::kAllow);
  }
  if (o.instance == "custom") {
    if (o.alpha.empty() || o.beta.empty()) throw InvalidArgument("custom needs --alpha and --beta");
    return build_problem(pure_state_from_json(read_json_file(o.alpha)),
                         pure_state_from_json(read_json_file(o.beta)), IdenticalPolicy::kAllow);
  }
  throw InvalidArgument("unknown instance '" + o.instance + "'");
}

int cmd_evolve(const GlobalOptions& g, const EvolveOptions& o, std::ostream& out) {
  validate_epsilon(g.epsilon);
  const AdiabaticProblem problem = evolve_problem(o);
  IntegratorConfig config;
  config.max_step = o.max_step;
  config.samples = o.samples;
  const bool effective = o.effective || !problem.has_states();
  const Integrator integrator = effective ? Integrator::kEffective : Integrator::kFull;

  EvolutionResult result = [&] {
    if (o.schedule == "local") return evolve_local(problem, g.epsilon, config, integrator);
    if (o.schedule != "linear") throw InvalidArgument("--schedule must be local or linear");
    if (!o.total_time) throw InvalidArgument("linear schedule needs --T");
    const Schedule schedule = linear_schedule(*o.total_time);
    return effective ? evolve_effective(problem, schedule, config)
                     : evolve(problem, schedule, config);
  }();

  if (!o.trajectory.empty()) {
    std::ofstream file(o.trajectory);
    if (!file) throw InvalidArgument("cannot write " + o.trajectory);
    write_trajectory_csv(file, result.trajectory);
  }
  emit_object(out, g.fmt(), to_json(result, g.epsilon),
              {"success_probability", "T", "epsilon", "unitarity_defect"});
  return kOk;
}

std::vector<double> sweep_values(const SweepOptions& o) {
  std::vector<double> values = o.values;
  if (values.empty() && o.from && o.to && o.steps > 0) {
    for (std::size_t k = 0; k < o.steps; ++k) {
      const double frac = o.steps == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(o.steps - 1);
      values.push_back(*o.from + frac * (*o.to - *o.from));
    }
  }
  if (values.empty()) throw InvalidArgument("empty sweep range: give --values or --from/--to/--steps");
  return values;
}

int cmd_sweep(const GlobalOptions& g, const SweepOptions& o, std::ostream& out) {
  std::vector<double> values = sweep_values(o);
  std::vector<std::vector<double>> rows;
  if (o.axis == "epsilon") {
    const StatePair states = grover_instance(o.size, 1);
    const AdiabaticProblem problem = o.full ? build_problem(states.first, states.second)
                                            : grover_problem_effective(o.size);
    const auto sweep = error_scaling_sweep(problem, values, IntegratorConfig{},
                                           o.full ? Integrator::kFull : Integrator::kEffective);
    for (const SweepRow& row : sweep) rows.push_back({row.epsilon, row.T, row.infidelity});
    write_table(out, g.fmt(), {"epsilon", "T", "infidelity"}, rows);
    return kOk;
  }
  std::sort(values.begin(), values.end());
  if (o.axis == "fidelity") {
    for (double f : values) {
      const RuntimeReport r = runtime_from_fidelity(f, g.epsilon);
      rows.push_back({f, r.angle, r.T});
    }
    write_table(out, g.fmt(), {"fidelity", "angle", "T"}, rows);
    return kOk;
  }
  if (o.axis == "N") {
    for (double v : values) {
      if (v < 2.0 || v != std::floor(v)) throw InvalidArgument("N values must be integers >= 2");
      const auto n_items = static_cast<std::size_t>(v);
      const RuntimeReport r = predicted_runtime(grover_instance(n_items, 1), g.epsilon);
      rows.push_back({v, r.fidelity, r.T, r.T * g.epsilon});
    }
    write_table(out, g.fmt(), {"N", "fidelity", "T", "T_epsilon"}, rows);
    return kOk;
  }
  throw InvalidArgument("--axis must be epsilon, fidelity or N");
}

int cmd_mixed(const GlobalOptions& g, const MixedOptions& o, std::ostream& out) {
  const DensityMatrix rho = density_matrix_from_json(read_json_file(o.rho));
  const DensityMatrix sigma = density_matrix_from_json(read_json_file(o.sigma));
  const RuntimeReport exact = runtime_mixed(rho, sigma, g.epsilon);
  const double sampled = runtime_mixed_by_purification(rho, sigma, g.epsilon, o.budget, g.seed);
  json object = to_json(exact);
  object["sampled_T"] = sampled;
  object["budget"] = o.budget;
  object["seed"] = g.seed;
  emit_object(out, g.fmt(), object,
              {"T", "sampled_T", "fidelity", "angle", "epsilon", "trace_distance_form", "budget",
               "seed"});
  return kOk;
}

int cmd_schedule(const GlobalOptions& g, const ScheduleOptions& o, std::ostream& out) {
  if (!o.fidelity) throw InvalidArgument("schedule needs --fidelity (overlap modulus a)");
  Schedule schedule = [&] {
    if (o.kind == "local") return local_schedule(*o.fidelity, g.epsilon);
    if (o.kind != "linear") throw InvalidArgument("--kind must be local or linear");
    if (!o.total_time) throw InvalidArgument("linear schedule needs --T");
    return linear_schedule(*o.total_time);
  }();
  const auto samples = sample_schedule(schedule, *o.fidelity, o.points);
  if (g.fmt() == Format::kCsv) {
    write_schedule_csv(out, samples);
    return kOk;
  }
  std::vector<std::vector<double>> rows;
  for (const ScheduleSample& p : samples) rows.push_back({p.t, p.s, p.gap, p.ds_dt});
  write_table(out, Format::kJson, {"t", "s", "gap", "ds_dt"}, rows);
  return kOk;
}

int cmd_dj(const GlobalOptions& g, const DjOptions& o, std::ostream& out) {
  const BooleanFunctionSpec f = BooleanFunctionSpec::from_bits(o.table);
  const DeutschJozsaInstance dj = deutsch_jozsa_instance(f);
  const RuntimeReport r = predicted_runtime({dj.alpha, dj.beta}, g.epsilon);
  json object = to_json(r);
  object["classification"] = to_string(dj.classification);
  object["n"] = f.n;
  object["N"] = f.size();
  object["mu"] = dj.mu;
  object["nu"] = dj.nu;
  emit_object(out, g.fmt(), object,
              {"classification", "n", "N", "mu", "nu", "fidelity", "T", "angle", "epsilon",
               "trace_distance_form"});
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local adiabatic evolution: runtime versus fidelity", "adiabat"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--epsilon", g.epsilon, "Adiabatic precision, in (0, 1]")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for stochastic purification search")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", g.output, "Write the primary output to this path");

  RuntimeOptions runtime_opts;
  auto* runtime = app.add_subcommand("runtime", "Minimal local-adiabatic runtime");
  runtime->add_option("--fidelity", runtime_opts.fidelity, "Overlap |<alpha|beta>|");
  runtime->add_option("--alpha", runtime_opts.alpha, "Initial state JSON");
  runtime->add_option("--beta", runtime_opts.beta, "Final state JSON");

  EvolveOptions evolve_opts;
  auto* evolve = app.add_subcommand("evolve", "Simulate the adiabatic evolution");
  evolve->add_option("instance", evolve_opts.instance, "grover | dj | custom")
      ->required()
      ->check(CLI::IsMember({"grover", "dj", "custom"}));
  evolve->add_option("--n", evolve_opts.qubits, "Qubits (N = 2^n)");
  evolve->add_option("--N", evolve_opts.size, "Grover database size");
  evolve->add_option("--marked", evolve_opts.marked, "Marked item, 1-based")->capture_default_str();
  evolve->add_option("--table", evolve_opts.table, "Deutsch-Jozsa truth table, e.g. 0011");
  evolve->add_option("--alpha", evolve_opts.alpha, "Initial state JSON (custom)");
  evolve->add_option("--beta", evolve_opts.beta, "Final state JSON (custom)");
  evolve->add_option("--schedule", evolve_opts.schedule, "local | linear")->capture_default_str();
  evolve->add_option("--T", evolve_opts.total_time, "Runtime of the linear schedule");
  evolve->add_flag("--effective", evolve_opts.effective, "Integrate the 2x2 block only");
  evolve->add_option("--max-step", evolve_opts.max_step)->capture_default_str();
  evolve->add_option("--samples", evolve_opts.samples)->capture_default_str();
  evolve->add_option("--trajectory", evolve_opts.trajectory, "Trajectory CSV path");

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Tabulate runtime or infidelity along an axis");
  sweep->add_option("--axis", sweep_opts.axis, "epsilon | fidelity | N")->required();
  sweep->add_option("--values", sweep_opts.values, "Comma-separated axis values")->delimiter(',');
  sweep->add_option("--from", sweep_opts.from);
  sweep->add_option("--to", sweep_opts.to);
  sweep->add_option("--steps", sweep_opts.steps);
  sweep->add_option("--N", sweep_opts.size, "Grover size for the epsilon axis")->capture_default_str();
  sweep->add_flag("--full", sweep_opts.full, "Use the full-space integrator");

  MixedOptions mixed_opts;
  auto* mixed = app.add_subcommand("mixed", "Mixed-state runtime and purification search");
  mixed->add_option("--rho", mixed_opts.rho, "Initial density matrix JSON")->required();
  mixed->add_option("--sigma", mixed_opts.sigma, "Final density matrix JSON")->required();
  mixed->add_option("--budget", mixed_opts.budget, "Sampled purification pairs")->capture_default_str();

  ScheduleOptions schedule_opts;
  auto* schedule = app.add_subcommand("schedule", "Dump s(t), gap and ds/dt samples");
  schedule->add_option("--fidelity,--a", schedule_opts.fidelity, "Overlap modulus a");
  schedule->add_option("--kind", schedule_opts.kind, "local | linear")->capture_default_str();
  schedule->add_option("--T", schedule_opts.total_time, "Runtime of the linear schedule");
  schedule->add_option("--points", schedule_opts.points)->capture_default_str();

  DjOptions dj_opts;
  auto* dj = app.add_subcommand("dj", "Classify a Deutsch-Jozsa truth table and predict T");
  dj->add_option("--table", dj_opts.table, "Truth table bits, e.g. 0011")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (runtime->parsed()) code = cmd_runtime(g, runtime_opts, buffer);
    else if (evolve->parsed()) code = cmd_evolve(g, evolve_opts, buffer);
    else if (sweep->parsed()) code = cmd_sweep(g, sweep_opts, buffer);
    else if (mixed->parsed()) code = cmd_mixed(g, mixed_opts, buffer);
    else if (schedule->parsed()) code = cmd_schedule(g, schedule_opts, buffer);
    else if (dj->parsed()) code = cmd_dj(g, dj_opts, buffer);
  } catch (const OrthogonalStates& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const IdenticalStates& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  }

  if (g.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(g.output);
    if (!file) {
      err << "error: cannot write " << g.output << '\n';
      return kInputError;
    }
    file << buffer.str();
  }
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace adiabatic::cli
