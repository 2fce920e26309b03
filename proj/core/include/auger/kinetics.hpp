#pragma once

#include <array>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "auger/model.hpp"
#include "auger/rosenbrock.hpp"
#include "auger/table.hpp"

namespace auger {

/// What happens to electrons that leave through the Auger channel.
enum class Coupling {
  /// Emitted electrons are gone for good; the five-component sum is conserved
  /// and the bound levels drain into the reservoir.
  isolated,
  /// The cathode is fed by its circuit: each emitted electron is replaced in
  /// level 0. n_a counts cumulative emitted charge and the four bound levels
  /// keep a constant sum, so a true steady state exists.
  replenished,
};

const char* to_string(Coupling c);
Coupling coupling_from_string(std::string_view s);

/// The quantity `coupling` conserves: all five populations when isolated,
/// the four bound levels when replenished.
double conserved_quantity(const PopulationState& s, Coupling coupling);

struct SolverOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;  ///< population units
  double max_step = std::numeric_limits<double>::infinity();
  double initial_step = 1e-10;  ///< also the first point of the default log output grid
  long max_steps = 2'000'000;
};

/// rel_tol = 1e-10, abs_tol = 1e-12 n_total, initial_step = 1e-3 min(tau_1, tau_3).
SolverOptions default_solver_options(const SystemParams& params);
void validate_solver_options(const SolverOptions& opts);

struct PopulationRates {
  double dn0 = 0.0;
  double dn1 = 0.0;
  double dn2 = 0.0;
  double dn3 = 0.0;
  double dn_a = 0.0;

  std::array<double, 5> to_array() const { return {dn0, dn1, dn2, dn3, dn_a}; }
  double sum() const { return dn0 + dn1 + dn2 + dn3 + dn_a; }
};

/// Right-hand side of the four-level rate equations plus the Auger reservoir.
PopulationRates rhs(const PopulationState& state, const SystemParams& params,
                    Coupling coupling = Coupling::isolated);

/// d(rhs)/d(state), row-major over (n0, n1, n2, n3, n_a).
using Jacobian = std::array<std::array<double, 5>, 5>;
Jacobian jacobian(const PopulationState& state, const SystemParams& params,
                  Coupling coupling = Coupling::isolated);

struct TrajectorySample {
  double t = 0.0;
  PopulationState state;
  double current = 0.0;
};

class Trajectory {
 public:
  Trajectory(Coupling coupling, double conserved_initial)
      : coupling_(coupling), conserved_initial_(conserved_initial) {}

  const std::vector<TrajectorySample>& samples() const { return samples_; }
  const TrajectorySample& front() const { return samples_.front(); }
  const TrajectorySample& back() const { return samples_.back(); }
  std::size_t size() const { return samples_.size(); }
  Coupling coupling() const { return coupling_; }
  const ode::RosenbrockStats& stats() const { return stats_; }

  double conserved_quantity(const PopulationState& s) const;
  double conserved_initial() const { return conserved_initial_; }
  /// max over samples of |conserved - initial| / initial.
  double max_conservation_error() const;

  void push_back(TrajectorySample s) { samples_.push_back(s); }
  void set_stats(const ode::RosenbrockStats& s) { stats_ = s; }

 private:
  Coupling coupling_;
  double conserved_initial_;
  std::vector<TrajectorySample> samples_;
  ode::RosenbrockStats stats_;
};

/// `points` log-spaced times from t_first to t_end inclusive.
std::vector<double> log_time_grid(double t_first, double t_end, std::size_t points);

inline constexpr std::size_t kDefaultTrajectoryPoints = 512;

/// Integrates from t = 0 to t_end. The trajectory holds the initial sample at
/// t = 0 followed by `output_times` (default: 512 log-spaced points from
/// opts.initial_step to t_end); t_end is appended if the grid stops short.
/// Components that dip below zero by at most abs_tol are reported as 0; a
/// deeper excursion throws NonFiniteState.
Trajectory integrate(const SystemParams& params, const PopulationState& initial, double t_end,
                     const SolverOptions& opts, Coupling coupling = Coupling::isolated,
                     std::span<const double> output_times = {});

/// max(tau_1, tau_3, 1/w_p, 1/(gamma_A n_total)). Throws ZeroPump for w_p = 0.
double relaxation_timescale(const SystemParams& params);

/// Columns t, n0, n1, n2, n3, n_a, j_ph.
Table trajectory_table(const Trajectory& trajectory);

}  // namespace auger
