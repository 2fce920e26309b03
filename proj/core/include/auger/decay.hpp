#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "auger/table.hpp"

namespace auger {

enum class DecayKind { radiative, auger };

/// Free decay of the metastable level through one channel, sampled on a grid.
struct DecayCurve {
  DecayKind kind = DecayKind::radiative;
  double n_z = 0.0;             ///< population at t = 0
  double rate_parameter = 0.0;  ///< tau_sp for radiative, gamma_A for Auger
  std::vector<double> t;
  std::vector<double> n2;
};

/// n_z exp(-t / tau_sp)
double radiative_population(double n_z, double tau_sp, double t);
/// 1 / (1/n_z + gamma_A t)
double auger_population(double n_z, double gamma_A, double t);

/// 100 x max(tau_sp, 1/(gamma_A n_z)).
double crossover_search_window(double n_z, double tau_sp, double gamma_A);

/// Smallest t > 0 where the two decay laws meet, located by a geometric scan
/// (64 points per decade over 12 decades below the search window) and
/// bisection to 1e-12 relative. Empty when the curves do not cross inside
/// the window, which is always the case for gamma_A n_z tau_sp <= 1.
std::optional<double> crossover_time(double n_z, double tau_sp, double gamma_A);

/// Both curves on the same grid (non-empty, strictly increasing, starting at 0).
std::pair<DecayCurve, DecayCurve> decay_curves(double n_z, double tau_sp, double gamma_A,
                                               std::span<const double> grid);

/// Time at which the curve first falls to n_z / 2, found numerically.
double half_population_time(DecayKind kind, double n_z, double rate_parameter);

/// Bisection for a sign change of `f` in [lo, hi]; stops at
/// hi - lo <= rel_tol * |hi|.
double bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol);

/// Columns t, n2_radiative, n2_auger.
Table decay_table(const DecayCurve& radiative, const DecayCurve& auger);

}  // namespace auger
