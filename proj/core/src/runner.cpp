#include "auger/runner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "auger/coherence.hpp"
#include "auger/decay.hpp"
#include "auger/errors.hpp"
#include "auger/plot.hpp"
#include "auger/steady_state.hpp"

namespace auger {
namespace {

struct Output {
  std::filesystem::path dir;
  RunResult result;

  void write(const std::string& name, std::string_view contents) {
    const auto path = dir / name;
    write_file_atomic(path, contents);
    result.files.push_back(path);
  }
};

bool flag(const KeyValueDocument& doc, std::string_view key, bool fallback) {
  const auto v = doc.find(key);
  return v ? parse_bool(*v, key) : fallback;
}

std::size_t count_or(const KeyValueDocument& doc, std::string_view key, std::size_t fallback) {
  const auto v = doc.find(key);
  return v ? static_cast<std::size_t>(parse_u64(*v, key)) : fallback;
}

std::uint64_t seed_of(const RunRequest& req) {
  if (req.seed_override) return *req.seed_override;
  const auto v = req.config.find("seed");
  return v ? parse_u64(*v, "seed") : 0;
}

RunResult run_simulate(const RunRequest& req, Output out) {
  const auto& doc = req.config;
  const auto params = params_from_config(doc);
  const auto opts = solver_options_from_config(doc, params);
  const double t_end = doc.contains("simulate.t_end")
                           ? doc.number("simulate.t_end")
                           : kRelaxationMultiple * relaxation_timescale(params);
  const auto points = count_or(doc, "simulate.points", kDefaultTrajectoryPoints);
  const auto coupling = coupling_from_string(doc.find("simulate.coupling").value_or("isolated"));
  if (points < 2) throw ValidationError("simulate.points must be >= 2");

  const auto grid = log_time_grid(std::min(opts.initial_step, 0.5 * t_end), t_end, points);
  const auto traj = integrate(params, ground_state(params.n_total), t_end, opts, coupling, grid);
  const auto table = trajectory_table(traj);
  if (flag(doc, "output.table", true)) out.write("trajectory.csv", table.to_csv());
  if (flag(doc, "output.plot", true)) {
    out.write("trajectory.svg", emit_plot(table, PlotKind::trajectory, true));
  }
  const auto& last = traj.back();
  out.result.summary = "t_end = " + format_double(t_end) + ", coupling = " + to_string(coupling) +
                       ", final n2 = " + format_double(last.state.n2) +
                       ", j_ph = " + format_double(last.current) +
                       ", conservation error = " + format_double(traj.max_conservation_error());
  return out.result;
}

RunResult run_steady(const RunRequest& req, Output out) {
  const auto& doc = req.config;
  const auto params = params_from_config(doc);
  auto solution = steady_populations(params);
  if (params.w_p > 0.0 && flag(doc, "steady.verify", true)) {
    const auto report = verify_against_ode(params, solver_options_from_config(doc, params));
    solution.ode_residual = report.n2_residual;
  }
  auto kv = steady_state_document(solution);
  kv.set("j_weak", weak_limit_current(params));
  kv.set("j_saturated", saturated_limit_current(params));
  out.write("steady_state.txt", kv.to_string());
  out.result.summary = "n2 = " + format_double(solution.n2) +
                       ", j_ph = " + format_double(solution.j_ph) + ", regime = " +
                       (solution.regime ? to_string(*solution.regime) : "none");
  return out.result;
}

RunResult run_sweep(const RunRequest& req, Output out) {
  const auto config = sweep_config_from_document(req.config, req.out_dir);
  const bool pump = config.axis == SweepAxis::pump;
  const auto table =
      pump ? run_pump_sweep(config, req.threads) : run_population_sweep(config, req.threads);
  const std::string stem = pump ? "sweep_pump" : "sweep_population";
  if (config.write_table) out.write(stem + ".csv", table.to_csv());
  if (config.write_plot) {
    out.write(stem + ".svg", emit_plot(table, pump ? PlotKind::pump_sweep : PlotKind::population_sweep,
                                       config.grid.scale == GridScale::log));
  }
  std::string summary = std::string("axis = ") + to_string(config.axis) +
                        ", points = " + std::to_string(table.rows());
  const auto j = table.numeric_column("j_ph");
  if (table.rows() >= 2 && std::all_of(j.begin(), j.end(), [](double v) { return v > 0.0; })) {
    const auto slopes = sweep_slopes(table);
    KeyValueDocument fit;
    fit.set("slope_low", slopes.low.slope);
    fit.set("slope_high", slopes.high.slope);
    fit.set("points_per_window", static_cast<double>(slopes.low.points));
    out.write(stem + "_fit.txt", fit.to_string());
    summary += ", low-end slope = " + format_double(slopes.low.slope) +
               ", high-end slope = " + format_double(slopes.high.slope);
  }
  out.result.summary = summary;
  return out.result;
}

RunResult run_decay(const RunRequest& req, Output out) {
  const auto& doc = req.config;
  const auto params = params_from_config(doc);
  const double n_z = doc.number_or("decay.n_z", params.n_total);
  const double t_max = doc.number_or(
      "decay.t_max", 10.0 * std::max(params.tau_sp, 1.0 / (params.gamma_A * n_z)));
  const auto points = count_or(doc, "decay.points", 512);
  if (points < 2) throw ValidationError("decay.points must be >= 2");
  if (!(t_max > 0.0)) throw NonPositiveParameter("decay.t_max", t_max);

  std::vector<double> grid{0.0};
  const auto tail = points == 2 ? std::vector<double>{t_max} : log_time_grid(1e-4 * t_max, t_max, points - 1);
  grid.insert(grid.end(), tail.begin(), tail.end());

  const auto [rad, aug] = decay_curves(n_z, params.tau_sp, params.gamma_A, grid);
  const auto table = decay_table(rad, aug);
  if (flag(doc, "output.table", true)) out.write("decay.csv", table.to_csv());
  if (flag(doc, "output.plot", true)) out.write("decay.svg", emit_plot(table, PlotKind::decay, true));

  const auto cross = crossover_time(n_z, params.tau_sp, params.gamma_A);
  KeyValueDocument kv;
  kv.set("n_z", n_z);
  kv.set("tau_sp", params.tau_sp);
  kv.set("gamma_A", params.gamma_A);
  kv.set("crossover_time", cross ? format_double(*cross) : std::string("none"));
  kv.set("search_window", crossover_search_window(n_z, params.tau_sp, params.gamma_A));
  kv.set("half_time_radiative", half_population_time(DecayKind::radiative, n_z, params.tau_sp));
  kv.set("half_time_auger", half_population_time(DecayKind::auger, n_z, params.gamma_A));
  out.write("decay_summary.txt", kv.to_string());
  out.result.summary = "crossover_time = " + kv.at("crossover_time");
  return out.result;
}

RunResult run_spectrum(const RunRequest& req, Output out) {
  const auto& doc = req.config;
  IonizationTimeDistribution dist;
  dist.family = time_family_from_string(doc.find("spectrum.family").value_or("gaussian"));
  dist.t0 = doc.number_or("spectrum.t0", 0.0);
  dist.sigma = doc.number_or("spectrum.sigma", 1.0);
  validate(dist);
  Wavepacket wp;
  wp.center = doc.number_or("spectrum.wavepacket_center", 0.0);
  wp.width = doc.number_or("spectrum.wavepacket_width", 0.1 * dist.sigma);
  validate(wp);

  std::size_t emitters = 0;
  const auto emitter_text = doc.find("spectrum.emitters").value_or("32");
  if (emitter_text == "steady_n2") {
    // The saturated level-2 population plays the role of the emitter count.
    const double n2 = steady_n2(params_from_config(doc));
    emitters = static_cast<std::size_t>(std::llround(n2));
  } else {
    emitters = static_cast<std::size_t>(parse_u64(emitter_text, "spectrum.emitters"));
  }
  if (emitters < 1) throw ValidationError("spectrum.emitters must be >= 1");

  const auto points = count_or(doc, "spectrum.omega_points", kDefaultOmegaPoints);
  std::vector<double> omega;
  if (doc.contains("spectrum.omega_max")) {
    const double top = doc.number("spectrum.omega_max");
    if (!(top > 0.0)) throw NonPositiveParameter("spectrum.omega_max", top);
    omega = default_omega_grid(8.0 / top, points);
  } else {
    omega = default_omega_grid(dist.family == TimeFamily::delta ? wp.width : dist.sigma, points);
  }

  const auto analytic = analytic_expected_density(dist, wp, emitters, omega);
  const auto analytic_table = spectrum_table(analytic);
  const bool tables = flag(doc, "output.table", true);
  if (tables) out.write("spectrum_analytic.csv", analytic_table.to_csv());

  const auto trials = count_or(doc, "spectrum.trials", 1024);
  const Table* plotted = &analytic_table;
  Table mc_table;
  if (trials >= 2) {
    constexpr std::size_t kMaxSampledEmitters = 100000;
    if (emitters > kMaxSampledEmitters) {
      throw ValidationError("spectrum.emitters = " + std::to_string(emitters) +
                            " is too large to sample; set spectrum.trials = 0 for the closed form only");
    }
    const auto mc = monte_carlo_expected_density(dist, wp, emitters, trials, seed_of(req), omega,
                                                 req.threads);
    mc_table = spectrum_table(mc);
    if (tables) out.write("spectrum_mc.csv", mc_table.to_csv());
    plotted = &mc_table;
  }
  if (flag(doc, "output.plot", true)) {
    out.write("spectrum.svg", emit_plot(*plotted, PlotKind::spectrum, false));
  }
  out.result.summary = "emitters = " + std::to_string(emitters) + ", coherent fraction at omega=0: " +
                       format_double(coherent_fraction(analytic, omega.front()));
  return out.result;
}

}  // namespace

const char* to_string(Subcommand c) {
  switch (c) {
    case Subcommand::simulate:
      return "simulate";
    case Subcommand::steady:
      return "steady";
    case Subcommand::sweep:
      return "sweep";
    case Subcommand::decay:
      return "decay";
    case Subcommand::spectrum:
      return "spectrum";
  }
  return "steady";
}

Subcommand subcommand_from_string(std::string_view s) {
  for (auto c : {Subcommand::simulate, Subcommand::steady, Subcommand::sweep, Subcommand::decay,
                 Subcommand::spectrum}) {
    if (s == to_string(c)) return c;
  }
  throw ValidationError("unknown subcommand '" + std::string(s) + "'");
}

const std::vector<std::string>& known_config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& p : system_param_keys()) k.push_back("params." + p);
    for (const char* s : {"fn.prefactor", "fn.barrier", "fn.field", "solver.rel_tol",
                          "solver.abs_tol", "solver.max_step", "solver.initial_step",
                          "solver.max_steps", "simulate.t_end", "simulate.points",
                          "simulate.coupling", "steady.verify", "sweep.axis", "sweep.min",
                          "sweep.max", "sweep.points", "sweep.scale", "output.table",
                          "output.plot", "seed", "decay.n_z", "decay.t_max", "decay.points",
                          "spectrum.family", "spectrum.t0", "spectrum.sigma",
                          "spectrum.wavepacket_center", "spectrum.wavepacket_width",
                          "spectrum.emitters", "spectrum.trials", "spectrum.omega_points",
                          "spectrum.omega_max"}) {
      k.emplace_back(s);
    }
    return k;
  }();
  return keys;
}

void check_config_keys(const KeyValueDocument& doc) {
  const auto& known = known_config_keys();
  for (const auto& key : doc.keys()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) throw UnknownKey(key);
  }
}

bool parse_bool(std::string_view text, std::string_view key) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw ConfigError("key '" + std::string(key) + "': expected true or false, got '" +
                    std::string(text) + "'");
}

std::uint64_t parse_u64(std::string_view text, std::string_view key) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ConfigError("key '" + std::string(key) + "': expected a non-negative integer, got '" +
                      std::string(text) + "'");
  }
  return v;
}

SystemParams params_from_config(const KeyValueDocument& doc) {
  auto params = params_from_document(doc, "params.");
  const bool any_fn = doc.contains("fn.prefactor") || doc.contains("fn.barrier") ||
                      doc.contains("fn.field");
  if (any_fn) {
    FowlerNordheimParams fn{doc.number("fn.prefactor"), doc.number("fn.barrier"),
                            doc.number("fn.field")};
    validate_fn_params(fn);
    params.beta = fn_transmission(fn);
  }
  return validate_params(params);
}

SolverOptions solver_options_from_config(const KeyValueDocument& doc, const SystemParams& params) {
  auto opts = default_solver_options(params);
  opts.rel_tol = doc.number_or("solver.rel_tol", opts.rel_tol);
  opts.abs_tol = doc.number_or("solver.abs_tol", opts.abs_tol);
  opts.max_step = doc.number_or("solver.max_step", opts.max_step);
  opts.initial_step = doc.number_or("solver.initial_step", opts.initial_step);
  if (const auto v = doc.find("solver.max_steps")) {
    opts.max_steps = static_cast<long>(parse_u64(*v, "solver.max_steps"));
  }
  validate_solver_options(opts);
  return opts;
}

SweepConfig sweep_config_from_document(const KeyValueDocument& doc,
                                       const std::filesystem::path& out_dir) {
  SweepConfig c;
  c.base = params_from_config(doc);
  c.axis = sweep_axis_from_string(doc.at("sweep.axis"));
  c.grid.min = doc.number("sweep.min");
  c.grid.max = doc.number("sweep.max");
  c.grid.points = static_cast<std::size_t>(parse_u64(doc.at("sweep.points"), "sweep.points"));
  c.grid.scale = grid_scale_from_string(doc.find("sweep.scale").value_or("log"));
  c.write_table = flag(doc, "output.table", true);
  c.write_plot = flag(doc, "output.plot", true);
  c.output_dir = out_dir;
  if (const auto v = doc.find("seed")) c.seed = parse_u64(*v, "seed");
  validate(c.grid);
  return c;
}

RunResult run(const RunRequest& request) {
  check_config_keys(request.config);
  std::filesystem::create_directories(request.out_dir);
  Output out{request.out_dir, {}};
  switch (request.command) {
    case Subcommand::simulate:
      return run_simulate(request, std::move(out));
    case Subcommand::steady:
      return run_steady(request, std::move(out));
    case Subcommand::sweep:
      return run_sweep(request, std::move(out));
    case Subcommand::decay:
      return run_decay(request, std::move(out));
    case Subcommand::spectrum:
      return run_spectrum(request, std::move(out));
  }
  return {};
}

}  // namespace auger
