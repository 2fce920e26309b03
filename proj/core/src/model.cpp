#include "auger/model.hpp"

#include <algorithm>
#include <cmath>

#include "auger/errors.hpp"

namespace auger {
namespace {

void require_finite(const char* field, double v) {
  if (!std::isfinite(v)) throw NonFiniteParameter(field);
}

void require_positive(const char* field, double v) {
  require_finite(field, v);
  if (!(v > 0.0)) throw NonPositiveParameter(field, v);
}

void require_non_negative(const char* field, double v) {
  require_finite(field, v);
  if (v < 0.0) throw NegativeParameter(field, v);
}

}  // namespace

SystemParams validate_params(const SystemParams& raw) {
  require_non_negative("w_p", raw.w_p);
  require_positive("tau_1", raw.tau_1);
  require_positive("tau_3", raw.tau_3);
  require_positive("tau_sp", raw.tau_sp);
  require_positive("gamma_A", raw.gamma_A);
  require_positive("n_total", raw.n_total);
  require_finite("beta", raw.beta);
  if (raw.beta < 0.0 || raw.beta > 1.0) throw ParameterOutOfRange("beta", raw.beta, 0.0, 1.0);

  const auto& e = raw.energies;
  require_finite("energies", e.e0);
  require_finite("energies", e.e1);
  require_finite("energies", e.e2);
  require_finite("energies", e.e3);
  require_finite("work_function", raw.work_function);
  if (e.e0 != 0.0) throw EnergyOrdering("energies: E0 must be 0");
  if (!(e.e0 < e.e1 && e.e1 < e.e2 && e.e2 < e.e3)) {
    throw EnergyOrdering("energies: require E0 < E1 < E2 < E3");
  }
  if (!(e.e3 < raw.work_function && raw.work_function < 2.0 * e.e2)) {
    throw WorkFunctionOutOfWindow(e.e3, raw.work_function, 2.0 * e.e2);
  }
  return raw;
}

void validate_state(const PopulationState& state) {
  static constexpr const char* names[] = {"n0", "n1", "n2", "n3", "n_a"};
  const auto v = state.to_array();
  for (std::size_t i = 0; i < v.size(); ++i) require_non_negative(names[i], v[i]);
}

void validate_fn_params(const FowlerNordheimParams& fn) {
  require_positive("fn.prefactor", fn.prefactor);
  require_positive("fn.barrier", fn.barrier);
  require_non_negative("fn.field", fn.field);
}

double instantaneous_current(const PopulationState& state, const SystemParams& params) {
  return 0.5 * params.beta * params.gamma_A * state.n2 * state.n2;
}

double fn_transmission(const FowlerNordheimParams& fn) {
  if (fn.field <= 0.0) return 0.0;
  const double raw = fn.prefactor * fn.field * fn.field * std::exp(-fn.barrier / fn.field);
  return std::clamp(raw, 0.0, 1.0);
}

}  // namespace auger
