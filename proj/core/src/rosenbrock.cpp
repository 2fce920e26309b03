#include "auger/rosenbrock.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "auger/errors.hpp"

namespace auger::ode {
namespace {

// RODAS, Hairer & Wanner, "Solving ODEs II", sec. IV.7, in the form that
// solves for the g_i increments directly.
struct Coefficients {
  static constexpr double gamma = 0.25;
  static constexpr double a21 = 1.544;
  static constexpr double a31 = 0.9466785280815826, a32 = 0.2557011698983284;
  static constexpr double a41 = 3.314825187068521, a42 = 2.896124015972201,
                          a43 = 0.9986419139977817;
  static constexpr double a51 = 1.221224509226641, a52 = 6.019134481288629,
                          a53 = 12.53708332932087, a54 = -0.6878860361058950;
  static constexpr double c21 = -5.6688;
  static constexpr double c31 = -2.430093356833875, c32 = -0.2063599157091915;
  static constexpr double c41 = -0.1073529058151375, c42 = -9.594562251023355,
                          c43 = -20.47028614809616;
  static constexpr double c51 = 7.496443313967647, c52 = -10.24680431464352,
                          c53 = -33.99990352819905, c54 = 11.70890893206160;
  static constexpr double c61 = 8.083246795921522, c62 = -7.981132988064893,
                          c63 = -31.52159432874371, c64 = 16.31930543123136,
                          c65 = -6.058818238834054;
};

bool all_finite(const Eigen::VectorXd& v) { return v.allFinite(); }

}  // namespace

RosenbrockSolver::RosenbrockSolver(std::size_t dimension, RhsFn rhs, JacobianFn jacobian,
                                   RosenbrockOptions opts)
    : n_(dimension), rhs_(std::move(rhs)), jac_(std::move(jacobian)), opts_(opts) {
  if (!(opts_.rel_tol > 0.0)) throw NonPositiveParameter("rel_tol", opts_.rel_tol);
  if (!(opts_.abs_tol > 0.0)) throw NonPositiveParameter("abs_tol", opts_.abs_tol);
  if (!(opts_.max_step > 0.0)) throw NonPositiveParameter("max_step", opts_.max_step);
  if (opts_.max_steps <= 0) throw NonPositiveParameter("max_steps", static_cast<double>(opts_.max_steps));
  if (opts_.initial_step < 0.0) throw NegativeParameter("initial_step", opts_.initial_step);
}

RosenbrockStats RosenbrockSolver::integrate(std::vector<double>& y_io, double t0,
                                            std::span<const double> output_times,
                                            const ObserverFn& observer,
                                            const StepCheckFn& on_accept) const {
  using C = Coefficients;
  using Vec = Eigen::VectorXd;
  using Mat = Eigen::MatrixXd;
  const auto n = static_cast<Eigen::Index>(n_);
  if (y_io.size() != n_) throw ValidationError("state dimension mismatch");
  for (std::size_t i = 0; i < output_times.size(); ++i) {
    const double prev = i == 0 ? t0 : output_times[i - 1];
    if (!(output_times[i] > prev)) throw ValidationError("output times must increase strictly");
  }

  RosenbrockStats stats;
  Vec y = Eigen::Map<const Vec>(y_io.data(), n);
  Vec f(n), ftmp(n), ytmp(n), g1(n), g2(n), g3(n), g4(n), g5(n), err(n), ynew(n);
  Mat jac(n, n), w(n, n);
  std::vector<double> jac_buf(n_ * n_);

  auto eval_rhs = [&](const Vec& state, Vec& out) {
    rhs_(std::span<const double>(state.data(), n_), std::span<double>(out.data(), n_));
    ++stats.rhs_evals;
  };
  auto error_norm = [&](const Vec& y0, const Vec& y1, const Vec& e) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double sc = opts_.abs_tol + opts_.rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
      acc += (e[i] / sc) * (e[i] / sc);
    }
    return std::sqrt(acc / static_cast<double>(n));
  };

  double t = t0;
  eval_rhs(y, f);
  if (!all_finite(f)) throw NonFiniteState("non-finite derivative at t = " + std::to_string(t));

  double h = opts_.initial_step;
  if (h <= 0.0) {
    // Crude start: a step over which the linear change is about the tolerance.
    const double fnorm = error_norm(y, y, f);
    h = fnorm > 0.0 ? 1e-2 / fnorm : 1e-6;
    if (!output_times.empty()) h = std::min(h, 1e-3 * (output_times.back() - t0));
  }
  h = std::min(h, opts_.max_step);

  bool last_rejected = false;
  for (double t_out : output_times) {
    while (t < t_out) {
      if (stats.accepted + stats.rejected >= opts_.max_steps) {
        throw StepLimitExceeded(opts_.max_steps, t, output_times.back());
      }
      // Absorb a rounding-sized remainder into the step instead of leaving a sliver.
      const bool clipped = t_out - t <= h * (1.0 + 1e-8);
      const double h_step = clipped ? t_out - t : h;
      if (!(h_step > 1e-15 * std::max(std::abs(t), 1e-300))) {
        throw NonFiniteState("step size underflow at t = " + std::to_string(t));
      }

      jac_(std::span<const double>(y.data(), n_), jac_buf);
      ++stats.jacobian_evals;
      for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) jac(r, c) = jac_buf[r * n + c];
      }
      w = -jac;
      w.diagonal().array() += 1.0 / (C::gamma * h_step);
      const Eigen::PartialPivLU<Mat> lu(w);
      const double inv_h = 1.0 / h_step;

      g1 = lu.solve(f);

      ytmp = y + C::a21 * g1;
      eval_rhs(ytmp, ftmp);
      g2 = lu.solve(ftmp + (C::c21 * inv_h) * g1);

      ytmp = y + C::a31 * g1 + C::a32 * g2;
      eval_rhs(ytmp, ftmp);
      g3 = lu.solve(ftmp + inv_h * (C::c31 * g1 + C::c32 * g2));

      ytmp = y + C::a41 * g1 + C::a42 * g2 + C::a43 * g3;
      eval_rhs(ytmp, ftmp);
      g4 = lu.solve(ftmp + inv_h * (C::c41 * g1 + C::c42 * g2 + C::c43 * g3));

      ytmp = y + C::a51 * g1 + C::a52 * g2 + C::a53 * g3 + C::a54 * g4;
      eval_rhs(ytmp, ftmp);
      g5 = lu.solve(ftmp + inv_h * (C::c51 * g1 + C::c52 * g2 + C::c53 * g3 + C::c54 * g4));

      ytmp += g5;
      eval_rhs(ytmp, ftmp);
      err = lu.solve(ftmp +
                     inv_h * (C::c61 * g1 + C::c62 * g2 + C::c63 * g3 + C::c64 * g4 + C::c65 * g5));
      ynew = ytmp + err;

      const double e = all_finite(ynew) && all_finite(err) ? error_norm(y, ynew, err)
                                                           : std::numeric_limits<double>::infinity();
      double fac = e > 0.0 ? 0.9 * std::pow(e, -0.25) : 6.0;
      fac = std::clamp(fac, 0.2, 6.0);

      if (e <= 1.0) {
        ++stats.accepted;
        t = clipped ? t_out : t + h_step;
        y = ynew;
        eval_rhs(y, f);
        if (!all_finite(f)) throw NonFiniteState("non-finite derivative at t = " + std::to_string(t));
        if (on_accept) on_accept(t, std::span<const double>(y.data(), n_));
        if (last_rejected) fac = std::min(fac, 1.0);
        last_rejected = false;
        // A clipped step says little about the natural step size.
        h = std::min(clipped ? std::max(h, h_step * fac) : h_step * fac, opts_.max_step);
      } else {
        ++stats.rejected;
        if (!std::isfinite(e)) fac = 0.2;
        last_rejected = true;
        h = h_step * fac;
      }
    }
    if (observer) observer(t, std::span<const double>(y.data(), n_));
  }

  for (Eigen::Index i = 0; i < n; ++i) y_io[i] = y[i];
  return stats;
}

}  // namespace auger::ode
