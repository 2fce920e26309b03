#pragma once

#include <optional>
#include <string_view>

#include "auger/config.hpp"
#include "auger/kinetics.hpp"
#include "auger/model.hpp"

namespace auger {

enum class Regime { weak, intermediate, saturated };

const char* to_string(Regime r);
Regime regime_from_string(std::string_view s);

/// r = w_p / (gamma_A N) below this is Weak.
inline constexpr double kWeakRegimeBound = 1e-2;
/// r above this is Saturated.
inline constexpr double kSaturatedRegimeBound = 1e2;
/// n1 + n3 above this fraction of N flags the level-0/level-2 approximation.
inline constexpr double kNeglectedLevelsTolerance = 1e-2;

struct SteadyStateSolution {
  double n0 = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  double n3 = 0.0;
  double j_ph = 0.0;
  std::optional<Regime> regime;  ///< empty when w_p = 0
  double pump_ratio = 0.0;
  std::optional<double> ode_residual;
  /// n1 + n3 exceeds kNeglectedLevelsTolerance * N.
  bool approximation_degraded = false;
};

double pump_ratio(const SystemParams& params);

/// Level-2 population from the quadratic balance w_p (N - n2) = gamma_A n2^2,
/// evaluated as 2N / (1 + sqrt(1 + 4 N gamma_A / w_p)). Zero without pumping.
double steady_n2(const SystemParams& params);

/// The same root in the textbook form (w_p / 2 gamma_A)(sqrt(1 + 4N gamma_A / w_p) - 1).
/// Loses precision catastrophically in the saturated regime; kept for comparison.
double steady_n2_textbook(const SystemParams& params);

SteadyStateSolution steady_populations(const SystemParams& params);

/// (beta/2) w_p N.
double weak_limit_current(const SystemParams& params);
/// (beta/2) gamma_A N^2.
double saturated_limit_current(const SystemParams& params);
/// (beta/2) gamma_A steady_n2^2.
double steady_current(const SystemParams& params);

/// Throws ZeroPump when w_p = 0.
Regime classify_regime(const SystemParams& params);

struct OdeResidualReport {
  SteadyStateSolution analytic;
  PopulationState final_state;
  double t_end = 0.0;
  double n0_residual = 0.0;  ///< |ode - analytic| / analytic, informational
  double n1_residual = 0.0;  ///< informational
  double n2_residual = 0.0;  ///< the checked quantity
  double n3_residual = 0.0;  ///< informational
  bool inversion = false;    ///< ode n2 > ode n1
  double conservation_error = 0.0;
  ode::RosenbrockStats stats;
};

/// Integrates the replenished rate equations from the ground state to
/// 20 x relaxation_timescale and compares with steady_populations.
OdeResidualReport verify_against_ode(const SystemParams& params, const SolverOptions& opts);

inline constexpr double kRelaxationMultiple = 20.0;

/// Flat key-value form; regime is one of "weak", "intermediate", "saturated"
/// and is omitted without pumping.
KeyValueDocument steady_state_document(const SteadyStateSolution& s);

}  // namespace auger
