#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace auger::ode {

/// dy/dt = f(y) for an autonomous system.
using RhsFn = std::function<void(std::span<const double> y, std::span<double> dydt)>;
/// Row-major n x n Jacobian df/dy.
using JacobianFn = std::function<void(std::span<const double> y, std::span<double> jac)>;
/// Called at every requested output time.
using ObserverFn = std::function<void(double t, std::span<const double> y)>;
/// Called after every accepted internal step; may throw to abort.
using StepCheckFn = std::function<void(double t, std::span<const double> y)>;

struct RosenbrockOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double initial_step = 0.0;  ///< 0 picks a step from the initial derivative
  double max_step = std::numeric_limits<double>::infinity();
  long max_steps = 1'000'000;
};

struct RosenbrockStats {
  long accepted = 0;
  long rejected = 0;
  long rhs_evals = 0;
  long jacobian_evals = 0;
};

/// Adaptive 4(3) Rosenbrock method with a stiffly accurate L-stable main
/// formula (Hairer & Wanner's RODAS coefficient set). Every stage is a linear
/// combination of f and J applied through W = I/(gamma h) - J, so any linear
/// invariant c with c^T f(y) = 0 is preserved to rounding.
class RosenbrockSolver {
 public:
  RosenbrockSolver(std::size_t dimension, RhsFn rhs, JacobianFn jacobian, RosenbrockOptions opts);

  /// Advances `y` from t0 through every time in `output_times` (strictly
  /// increasing, all > t0). Steps are clipped so each output time is hit
  /// exactly. Throws StepLimitExceeded or NonFiniteState.
  RosenbrockStats integrate(std::vector<double>& y, double t0, std::span<const double> output_times,
                            const ObserverFn& observer, const StepCheckFn& on_accept = {}) const;

  static constexpr int order = 4;

 private:
  std::size_t n_;
  RhsFn rhs_;
  JacobianFn jac_;
  RosenbrockOptions opts_;
};

}  // namespace auger::ode
