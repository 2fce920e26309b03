#include "auger/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "auger/errors.hpp"

namespace auger {

const char* to_string(Coupling c) {
  switch (c) {
    case Coupling::isolated:
      return "isolated";
    case Coupling::replenished:
      return "replenished";
  }
  return "isolated";
}

Coupling coupling_from_string(std::string_view s) {
  if (s == "isolated") return Coupling::isolated;
  if (s == "replenished") return Coupling::replenished;
  throw ValidationError("unknown coupling '" + std::string(s) + "' (isolated|replenished)");
}

SolverOptions default_solver_options(const SystemParams& params) {
  SolverOptions opts;
  opts.abs_tol = 1e-12 * params.n_total;
  opts.initial_step = 1e-3 * std::min(params.tau_1, params.tau_3);
  return opts;
}

void validate_solver_options(const SolverOptions& opts) {
  if (!(opts.rel_tol > 0.0)) throw NonPositiveParameter("rel_tol", opts.rel_tol);
  if (!(opts.abs_tol > 0.0)) throw NonPositiveParameter("abs_tol", opts.abs_tol);
  if (!(opts.max_step > 0.0)) throw NonPositiveParameter("max_step", opts.max_step);
  if (!(opts.initial_step > 0.0)) throw NonPositiveParameter("initial_step", opts.initial_step);
  if (opts.max_steps <= 0) {
    throw NonPositiveParameter("max_steps", static_cast<double>(opts.max_steps));
  }
}

PopulationRates rhs(const PopulationState& s, const SystemParams& p, Coupling coupling) {
  const double pump = p.w_p * (s.n0 - s.n3);
  const double decay1 = s.n1 / p.tau_1;
  const double decay3 = s.n3 / p.tau_3;
  const double auger = p.gamma_A * s.n2 * s.n2;
  const double emitted = 0.5 * auger;

  PopulationRates d;
  d.dn3 = pump - decay3;
  d.dn2 = decay3 - auger;
  d.dn1 = emitted - decay1;
  d.dn0 = -pump + decay1;
  d.dn_a = emitted;
  if (coupling == Coupling::replenished) d.dn0 += emitted;
  return d;
}

Jacobian jacobian(const PopulationState& s, const SystemParams& p, Coupling coupling) {
  const double w = p.w_p;
  const double g = p.gamma_A * s.n2;  // d(emitted)/dn2
  Jacobian j{};
  // row order: n0, n1, n2, n3, n_a
  j[0] = {-w, 1.0 / p.tau_1, coupling == Coupling::replenished ? g : 0.0, w, 0.0};
  j[1] = {0.0, -1.0 / p.tau_1, g, 0.0, 0.0};
  j[2] = {0.0, 0.0, -2.0 * g, 1.0 / p.tau_3, 0.0};
  j[3] = {w, 0.0, 0.0, -w - 1.0 / p.tau_3, 0.0};
  j[4] = {0.0, 0.0, g, 0.0, 0.0};
  return j;
}

double conserved_quantity(const PopulationState& s, Coupling coupling) {
  return coupling == Coupling::isolated ? s.total() : s.bound_total();
}

double Trajectory::conserved_quantity(const PopulationState& s) const {
  return auger::conserved_quantity(s, coupling_);
}

double Trajectory::max_conservation_error() const {
  double worst = 0.0;
  for (const auto& smp : samples_) {
    worst = std::max(worst, std::abs(conserved_quantity(smp.state) - conserved_initial_) /
                                conserved_initial_);
  }
  return worst;
}

std::vector<double> log_time_grid(double t_first, double t_end, std::size_t points) {
  if (!(t_first > 0.0) || !(t_end > t_first)) {
    throw ValidationError("log time grid needs 0 < t_first < t_end");
  }
  if (points < 2) throw ValidationError("log time grid needs at least 2 points");
  std::vector<double> grid(points);
  const double l0 = std::log(t_first);
  const double l1 = std::log(t_end);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = std::exp(l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  grid.front() = t_first;
  grid.back() = t_end;
  return grid;
}

Trajectory integrate(const SystemParams& params, const PopulationState& initial, double t_end,
                     const SolverOptions& opts, Coupling coupling,
                     std::span<const double> output_times) {
  validate_solver_options(opts);
  validate_state(initial);
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw NonPositiveParameter("t_end", t_end);

  std::vector<double> grid;
  if (output_times.empty()) {
    const double first = std::min(opts.initial_step, 0.5 * t_end);
    grid = log_time_grid(first, t_end, kDefaultTrajectoryPoints);
  } else {
    grid.assign(output_times.begin(), output_times.end());
    if (grid.front() <= 0.0) throw ValidationError("output times must be > 0");
    if (grid.back() > t_end) throw ValidationError("output times must not exceed t_end");
    if (grid.back() < t_end) grid.push_back(t_end);
  }

  Trajectory traj(coupling, conserved_quantity(initial, coupling));
  traj.push_back({0.0, initial, instantaneous_current(initial, params)});

  auto f = [&params, coupling](std::span<const double> y, std::span<double> dy) {
    const auto r = rhs(PopulationState{y[0], y[1], y[2], y[3], y[4]}, params, coupling);
    dy[0] = r.dn0;
    dy[1] = r.dn1;
    dy[2] = r.dn2;
    dy[3] = r.dn3;
    dy[4] = r.dn_a;
  };
  auto jac = [&params, coupling](std::span<const double> y, std::span<double> out) {
    const auto j = jacobian(PopulationState{y[0], y[1], y[2], y[3], y[4]}, params, coupling);
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) out[r * 5 + c] = j[r][c];
    }
  };
  const double abs_tol = opts.abs_tol;
  auto check = [abs_tol](double t, std::span<const double> y) {
    for (double v : y) {
      if (!std::isfinite(v)) throw NonFiniteState("non-finite population at t = " + std::to_string(t));
      if (v < -abs_tol) {
        throw NonFiniteState("population went negative beyond abs_tol at t = " + std::to_string(t));
      }
    }
  };
  auto observe = [&](double t, std::span<const double> y) {
    PopulationState s{y[0], y[1], y[2], y[3], y[4]};
    for (double* v : {&s.n0, &s.n1, &s.n2, &s.n3, &s.n_a}) *v = std::max(*v, 0.0);
    traj.push_back({t, s, instantaneous_current(s, params)});
  };

  ode::RosenbrockOptions ropts;
  ropts.rel_tol = opts.rel_tol;
  ropts.abs_tol = opts.abs_tol;
  ropts.initial_step = opts.initial_step;
  ropts.max_step = opts.max_step;
  ropts.max_steps = opts.max_steps;
  const ode::RosenbrockSolver solver(5, f, jac, ropts);

  const auto a = initial.to_array();
  std::vector<double> y(a.begin(), a.end());
  traj.set_stats(solver.integrate(y, 0.0, grid, observe, check));
  return traj;
}

double relaxation_timescale(const SystemParams& params) {
  if (params.w_p <= 0.0) throw ZeroPump();
  return std::max({params.tau_1, params.tau_3, 1.0 / params.w_p,
                   1.0 / (params.gamma_A * params.n_total)});
}

Table trajectory_table(const Trajectory& trajectory) {
  Table t({"t", "n0", "n1", "n2", "n3", "n_a", "j_ph"});
  for (const auto& s : trajectory.samples()) {
    t.add_row(std::vector<double>{s.t, s.state.n0, s.state.n1, s.state.n2, s.state.n3,
                                  s.state.n_a, s.current});
  }
  return t;
}

}  // namespace auger
