#include "auger/decay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "auger/errors.hpp"

namespace auger {
namespace {

void require_positive(const char* name, double v) {
  if (!std::isfinite(v)) throw NonFiniteParameter(name);
  if (!(v > 0.0)) throw NonPositiveParameter(name, v);
}

constexpr int kScanPointsPerDecade = 64;
constexpr int kScanDecades = 12;
constexpr double kCrossoverRelTol = 1e-12;

}  // namespace

double radiative_population(double n_z, double tau_sp, double t) {
  return n_z * std::exp(-t / tau_sp);
}

double auger_population(double n_z, double gamma_A, double t) {
  return 1.0 / (1.0 / n_z + gamma_A * t);
}

double crossover_search_window(double n_z, double tau_sp, double gamma_A) {
  return 100.0 * std::max(tau_sp, 1.0 / (gamma_A * n_z));
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
  double f_lo = f(lo);
  if (f_lo == 0.0) return lo;
  for (int iter = 0; iter < 400 && hi - lo > rel_tol * std::abs(hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<double> crossover_time(double n_z, double tau_sp, double gamma_A) {
  require_positive("n_z", n_z);
  require_positive("tau_sp", tau_sp);
  require_positive("gamma_A", gamma_A);

  // With x = t / tau_sp and k = gamma_A n_z tau_sp the curves meet where
  // e^x = 1 + k x, which has a positive root only for k > 1.
  if (!(gamma_A * n_z * tau_sp > 1.0)) return std::nullopt;

  const double window = crossover_search_window(n_z, tau_sp, gamma_A);
  // Same sign as radiative - auger, but free of the O(x^2) cancellation that
  // makes the plain difference unusable for t << tau_sp.
  auto diff = [&](double t) {
    const double x = t / tau_sp;
    return std::log1p(gamma_A * n_z * t) / x - 1.0;
  };

  const int points = kScanPointsPerDecade * kScanDecades;
  const double t_min = window * std::pow(10.0, -kScanDecades);
  double prev_t = t_min;
  double prev_d = diff(prev_t);
  for (int i = 1; i <= points; ++i) {
    const double t = i == points ? window
                                 : t_min * std::pow(10.0, static_cast<double>(i) /
                                                              kScanPointsPerDecade);
    const double d = diff(t);
    if (prev_d != 0.0 && d != 0.0 && (d > 0.0) != (prev_d > 0.0)) {
      return bisect(diff, prev_t, t, kCrossoverRelTol);
    }
    if (d == 0.0 && prev_d != 0.0) return t;
    prev_t = t;
    prev_d = d;
  }
  return std::nullopt;
}

std::pair<DecayCurve, DecayCurve> decay_curves(double n_z, double tau_sp, double gamma_A,
                                               std::span<const double> grid) {
  require_positive("n_z", n_z);
  require_positive("tau_sp", tau_sp);
  require_positive("gamma_A", gamma_A);
  if (grid.empty()) throw ValidationError("decay grid is empty");
  if (grid.front() != 0.0) throw ValidationError("decay grid must start at t = 0");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw ValidationError("decay grid must increase strictly");
  }

  DecayCurve rad{DecayKind::radiative, n_z, tau_sp, {grid.begin(), grid.end()}, {}};
  DecayCurve aug{DecayKind::auger, n_z, gamma_A, {grid.begin(), grid.end()}, {}};
  rad.n2.reserve(grid.size());
  aug.n2.reserve(grid.size());
  for (double t : grid) {
    rad.n2.push_back(radiative_population(n_z, tau_sp, t));
    aug.n2.push_back(auger_population(n_z, gamma_A, t));
  }
  return {std::move(rad), std::move(aug)};
}

double half_population_time(DecayKind kind, double n_z, double rate_parameter) {
  require_positive("n_z", n_z);
  require_positive(kind == DecayKind::radiative ? "tau_sp" : "gamma_A", rate_parameter);
  auto pop = [&](double t) {
    return kind == DecayKind::radiative ? radiative_population(n_z, rate_parameter, t)
                                        : auger_population(n_z, rate_parameter, t);
  };
  auto f = [&](double t) { return pop(t) - 0.5 * n_z; };
  double hi = kind == DecayKind::radiative ? rate_parameter : 1.0 / (rate_parameter * n_z);
  while (f(hi) > 0.0) hi *= 2.0;
  return bisect(f, 0.0, hi, 2.0 * std::numeric_limits<double>::epsilon());
}

Table decay_table(const DecayCurve& radiative, const DecayCurve& auger) {
  if (radiative.t != auger.t) throw ValidationError("decay curves are on different grids");
  Table t({"t", "n2_radiative", "n2_auger"});
  for (std::size_t i = 0; i < radiative.t.size(); ++i) {
    t.add_row(std::vector<double>{radiative.t[i], radiative.n2[i], auger.n2[i]});
  }
  return t;
}

}  // namespace auger
