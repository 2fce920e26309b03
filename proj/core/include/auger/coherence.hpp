#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "auger/table.hpp"

namespace auger {

enum class TimeFamily { delta, gaussian, exponential, uniform };

const char* to_string(TimeFamily f);
TimeFamily time_family_from_string(std::string_view s);

/// Distribution of the instants at which individual atoms are ionized.
///   delta:       every emitter at t0
///   gaussian:    mean t0, standard deviation sigma
///   exponential: t0 + Exp(mean sigma)
///   uniform:     flat on [t0 - sigma, t0 + sigma]
struct IonizationTimeDistribution {
  TimeFamily family = TimeFamily::gaussian;
  double t0 = 0.0;
  double sigma = 1.0;
};

void validate(const IonizationTimeDistribution& dist);

/// |f(omega)|^2 with f(omega) = integral f(t) exp(i omega t) dt.
double coherence_factor(const IonizationTimeDistribution& dist, double omega);

/// Gaussian single-electron wavepacket; |psi(t)|^2 has standard deviation
/// `width` and unit norm.
struct Wavepacket {
  double center = 0.0;
  double width = 1.0;
};

void validate(const Wavepacket& wp);

/// |psi(omega)|^2 = 2 sqrt(2 pi) width exp(-2 width^2 omega^2).
double spectral_weight(const Wavepacket& wp, double omega);

struct SpectralDensity {
  std::vector<double> omega;
  std::vector<double> value;
  std::vector<double> std_error;  ///< empty for exact (non-sampled) results
  std::vector<double> coherent;
  std::vector<double> incoherent;
  std::size_t emitters = 0;

  std::size_t size() const { return omega.size(); }
  bool has_std_error() const { return !std_error.empty(); }
};

/// Engine for stream `stream` of run `seed`; streams are independent and
/// reproducible.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream);

/// n draws using stream 0 of `seed`.
std::vector<double> sample_ionization_times(const IonizationTimeDistribution& dist, std::size_t n,
                                            std::uint64_t seed);
std::vector<double> sample_ionization_times(const IonizationTimeDistribution& dist, std::size_t n,
                                            std::mt19937_64& engine);

/// rho(omega) = |psi(omega)|^2 |sum_i exp(i omega t_i)|^2 for one realization.
SpectralDensity spectral_density_single_shot(std::span<const double> times, const Wavepacket& wp,
                                             std::span<const double> omega_grid);

/// The explicit O(N^2) double sum sum_{i,j} exp(i omega (t_i - t_j)) (real part).
double pair_phase_sum(std::span<const double> times, double omega);

/// |psi|^2 (N + N(N-1)|f|^2), split into incoherent N|psi|^2 and coherent
/// N(N-1)|f|^2|psi|^2.
SpectralDensity analytic_expected_density(const IonizationTimeDistribution& dist,
                                          const Wavepacket& wp, std::size_t n,
                                          std::span<const double> omega_grid);

/// Mean over `trials` single-shot densities, trial k drawing from stream k of
/// `seed`. Results do not depend on `threads` (0 = hardware concurrency).
SpectralDensity monte_carlo_expected_density(const IonizationTimeDistribution& dist,
                                             const Wavepacket& wp, std::size_t n,
                                             std::size_t trials, std::uint64_t seed,
                                             std::span<const double> omega_grid,
                                             unsigned threads = 1);

/// coherent / (coherent + incoherent) at a grid frequency, clamped to [0, 1].
/// Throws OffGrid.
double coherent_fraction(const SpectralDensity& density, double omega);

inline constexpr std::size_t kDefaultOmegaPoints = 256;

/// `points` linear frequencies on [0, 8 / scale].
std::vector<double> default_omega_grid(double scale, std::size_t points = kDefaultOmegaPoints);

/// Columns omega, value, stderr, coherent, incoherent, coherent_fraction.
Table spectrum_table(const SpectralDensity& density);

}  // namespace auger
