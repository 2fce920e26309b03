#pragma once

#include <array>

namespace auger {

/// Level energies in arbitrary (but mutually consistent) units; E0 is pinned at 0.
struct LevelEnergies {
  double e0 = 0.0;
  double e1 = 1.0;
  double e2 = 2.0;
  double e3 = 3.0;

  friend bool operator==(const LevelEnergies&, const LevelEnergies&) = default;
};

/// Constants of the four-level Auger photoemission model.
struct SystemParams {
  double w_p = 0.0;      ///< pump rate [1/s]
  double tau_1 = 1e-7;   ///< level-1 lifetime [s]
  double tau_3 = 1e-7;   ///< level-3 lifetime [s]
  double tau_sp = 1e-3;  ///< radiative lifetime of level 2 [s]
  double gamma_A = 1.0;  ///< Auger coefficient [1/(population s)]
  double n_total = 1.0;  ///< total population
  double beta = 1.0;     ///< tunneling transmission coefficient, [0, 1]
  LevelEnergies energies{};
  double work_function = 3.5;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Populations of levels 0..3 plus the emitted Auger reservoir.
struct PopulationState {
  double n0 = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  double n3 = 0.0;
  double n_a = 0.0;

  static constexpr std::size_t size = 5;

  std::array<double, size> to_array() const { return {n0, n1, n2, n3, n_a}; }
  static PopulationState from_array(const std::array<double, size>& v) {
    return {v[0], v[1], v[2], v[3], v[4]};
  }
  /// Sum over all five components.
  double total() const { return n0 + n1 + n2 + n3 + n_a; }
  /// Sum over the four bound levels (excludes the emitted reservoir).
  double bound_total() const { return n0 + n1 + n2 + n3; }

  friend bool operator==(const PopulationState&, const PopulationState&) = default;
};

/// Everything starts in the ground level.
inline PopulationState ground_state(double n_total) { return {n_total, 0.0, 0.0, 0.0, 0.0}; }

struct FowlerNordheimParams {
  double prefactor = 1.0;  ///< a, current per field^2
  double barrier = 1.0;    ///< b, field units
  double field = 0.0;      ///< applied field F
};

/// Checks every SystemParams invariant and returns the value unchanged.
/// Throws a distinct ValidationError subclass per violated bound.
SystemParams validate_params(const SystemParams& raw);

/// Rejects negative or non-finite components.
void validate_state(const PopulationState& state);

void validate_fn_params(const FowlerNordheimParams& fn);

/// Emitted photocurrent J = (beta/2) gamma_A n2^2.
double instantaneous_current(const PopulationState& state, const SystemParams& params);

/// beta = a F^2 exp(-b/F), clamped to [0, 1]. F = 0 gives 0.
double fn_transmission(const FowlerNordheimParams& fn);

}  // namespace auger
