#include "auger/steady_state.hpp"

#include <cmath>

#include "auger/errors.hpp"

namespace auger {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::weak:
      return "weak";
    case Regime::intermediate:
      return "intermediate";
    case Regime::saturated:
      return "saturated";
  }
  return "intermediate";
}

Regime regime_from_string(std::string_view s) {
  if (s == "weak") return Regime::weak;
  if (s == "intermediate") return Regime::intermediate;
  if (s == "saturated") return Regime::saturated;
  throw ValidationError("unknown regime '" + std::string(s) + "'");
}

double pump_ratio(const SystemParams& params) {
  return params.w_p / (params.gamma_A * params.n_total);
}

double steady_n2(const SystemParams& params) {
  if (params.w_p <= 0.0) return 0.0;
  const double x = 4.0 * params.n_total * params.gamma_A / params.w_p;
  return 2.0 * params.n_total / (1.0 + std::sqrt(1.0 + x));
}

double steady_n2_textbook(const SystemParams& params) {
  if (params.w_p <= 0.0) return 0.0;
  const double half = params.w_p / (2.0 * params.gamma_A);
  return half * (std::sqrt(1.0 + 4.0 * params.n_total / (params.w_p / params.gamma_A)) - 1.0);
}

SteadyStateSolution steady_populations(const SystemParams& params) {
  SteadyStateSolution s;
  s.n2 = steady_n2(params);
  s.n0 = params.n_total - s.n2;
  const double denom = 1.0 + params.w_p * params.tau_3;
  s.n1 = params.w_p * params.tau_1 / denom * s.n0;
  s.n3 = params.w_p * params.tau_3 / denom * s.n0;
  s.j_ph = 0.5 * params.beta * params.gamma_A * s.n2 * s.n2;
  s.pump_ratio = pump_ratio(params);
  if (params.w_p > 0.0) s.regime = classify_regime(params);
  s.approximation_degraded = s.n1 + s.n3 > kNeglectedLevelsTolerance * params.n_total;
  return s;
}

double weak_limit_current(const SystemParams& params) {
  return 0.5 * params.beta * params.w_p * params.n_total;
}

double saturated_limit_current(const SystemParams& params) {
  return 0.5 * params.beta * params.gamma_A * params.n_total * params.n_total;
}

double steady_current(const SystemParams& params) {
  const double n2 = steady_n2(params);
  return 0.5 * params.beta * params.gamma_A * n2 * n2;
}

Regime classify_regime(const SystemParams& params) {
  if (params.w_p <= 0.0) throw ZeroPump();
  const double r = pump_ratio(params);
  if (r < kWeakRegimeBound) return Regime::weak;
  if (r > kSaturatedRegimeBound) return Regime::saturated;
  return Regime::intermediate;
}

OdeResidualReport verify_against_ode(const SystemParams& params, const SolverOptions& opts) {
  if (params.w_p <= 0.0) throw ZeroPump();
  OdeResidualReport rep;
  rep.analytic = steady_populations(params);
  rep.t_end = kRelaxationMultiple * relaxation_timescale(params);

  const auto traj =
      integrate(params, ground_state(params.n_total), rep.t_end, opts, Coupling::replenished);
  rep.final_state = traj.back().state;
  rep.stats = traj.stats();
  rep.conservation_error = traj.max_conservation_error();

  auto rel = [](double ode, double analytic) {
    return analytic != 0.0 ? std::abs(ode - analytic) / std::abs(analytic) : std::abs(ode);
  };
  rep.n0_residual = rel(rep.final_state.n0, rep.analytic.n0);
  rep.n1_residual = rel(rep.final_state.n1, rep.analytic.n1);
  rep.n2_residual = rel(rep.final_state.n2, rep.analytic.n2);
  rep.n3_residual = rel(rep.final_state.n3, rep.analytic.n3);
  rep.inversion = rep.final_state.n2 > rep.final_state.n1;
  rep.analytic.ode_residual = rep.n2_residual;
  return rep;
}

KeyValueDocument steady_state_document(const SteadyStateSolution& s) {
  KeyValueDocument doc;
  doc.set("n0", s.n0);
  doc.set("n1", s.n1);
  doc.set("n2", s.n2);
  doc.set("n3", s.n3);
  doc.set("j_ph", s.j_ph);
  if (s.regime) doc.set("regime", std::string(to_string(*s.regime)));
  doc.set("pump_ratio", s.pump_ratio);
  if (s.ode_residual) doc.set("ode_residual", *s.ode_residual);
  doc.set("approximation_degraded", std::string(s.approximation_degraded ? "true" : "false"));
  return doc;
}

}  // namespace auger
