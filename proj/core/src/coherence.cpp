#include "auger/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "auger/errors.hpp"

namespace auger {
namespace {

void check_grid(std::span<const double> grid) {
  for (double w : grid) {
    if (!std::isfinite(w)) throw ValidationError("omega grid contains a non-finite value");
  }
}

}  // namespace

const char* to_string(TimeFamily f) {
  switch (f) {
    case TimeFamily::delta:
      return "delta";
    case TimeFamily::gaussian:
      return "gaussian";
    case TimeFamily::exponential:
      return "exponential";
    case TimeFamily::uniform:
      return "uniform";
  }
  return "gaussian";
}

TimeFamily time_family_from_string(std::string_view s) {
  if (s == "delta") return TimeFamily::delta;
  if (s == "gaussian") return TimeFamily::gaussian;
  if (s == "exponential") return TimeFamily::exponential;
  if (s == "uniform") return TimeFamily::uniform;
  throw ValidationError("unknown distribution family '" + std::string(s) +
                        "' (delta|gaussian|exponential|uniform)");
}

void validate(const IonizationTimeDistribution& dist) {
  if (!std::isfinite(dist.t0)) throw NonFiniteParameter("t0");
  if (dist.family != TimeFamily::delta) {
    if (!std::isfinite(dist.sigma)) throw NonFiniteParameter("sigma");
    if (!(dist.sigma > 0.0)) throw NonPositiveParameter("sigma", dist.sigma);
  }
}

double coherence_factor(const IonizationTimeDistribution& dist, double omega) {
  const double x = omega * dist.sigma;
  switch (dist.family) {
    case TimeFamily::delta:
      return 1.0;
    case TimeFamily::gaussian:
      return std::exp(-x * x);
    case TimeFamily::exponential:
      return 1.0 / (1.0 + x * x);
    case TimeFamily::uniform: {
      if (x == 0.0) return 1.0;
      const double s = std::sin(x) / x;
      return s * s;
    }
  }
  return 1.0;
}

void validate(const Wavepacket& wp) {
  if (!std::isfinite(wp.center)) throw NonFiniteParameter("wavepacket.center");
  if (!(wp.width > 0.0)) throw NonPositiveParameter("wavepacket.width", wp.width);
}

double spectral_weight(const Wavepacket& wp, double omega) {
  return 2.0 * std::sqrt(2.0 * std::numbers::pi) * wp.width *
         std::exp(-2.0 * wp.width * wp.width * omega * omega);
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::vector<double> sample_ionization_times(const IonizationTimeDistribution& dist, std::size_t n,
                                            std::mt19937_64& engine) {
  validate(dist);
  if (n < 1) throw ValidationError("need at least one ionization time");
  std::vector<double> out(n, dist.t0);
  switch (dist.family) {
    case TimeFamily::delta:
      break;
    case TimeFamily::gaussian: {
      std::normal_distribution<double> d(dist.t0, dist.sigma);
      for (auto& t : out) t = d(engine);
      break;
    }
    case TimeFamily::exponential: {
      std::exponential_distribution<double> d(1.0 / dist.sigma);
      for (auto& t : out) t = dist.t0 + d(engine);
      break;
    }
    case TimeFamily::uniform: {
      std::uniform_real_distribution<double> d(dist.t0 - dist.sigma, dist.t0 + dist.sigma);
      for (auto& t : out) t = d(engine);
      break;
    }
  }
  return out;
}

std::vector<double> sample_ionization_times(const IonizationTimeDistribution& dist, std::size_t n,
                                            std::uint64_t seed) {
  auto engine = make_engine(seed, 0);
  return sample_ionization_times(dist, n, engine);
}

SpectralDensity spectral_density_single_shot(std::span<const double> times, const Wavepacket& wp,
                                             std::span<const double> omega_grid) {
  if (times.empty()) throw ValidationError("single-shot density needs at least one time");
  validate(wp);
  check_grid(omega_grid);
  const double n = static_cast<double>(times.size());
  // |sum exp(i w t_i)| is invariant under a common time shift; measuring
  // phases from the first emitter keeps identical times exactly in phase.
  const double t_ref = times.front();

  SpectralDensity out;
  out.emitters = times.size();
  out.omega.assign(omega_grid.begin(), omega_grid.end());
  out.value.reserve(omega_grid.size());
  out.coherent.reserve(omega_grid.size());
  out.incoherent.reserve(omega_grid.size());
  for (double w : omega_grid) {
    double re = 0.0;
    double im = 0.0;
    for (double t : times) {
      const double phase = w * (t - t_ref);
      re += std::cos(phase);
      im += std::sin(phase);
    }
    const double psi2 = spectral_weight(wp, w);
    const double value = psi2 * (re * re + im * im);
    const double incoherent = psi2 * n;
    out.value.push_back(value);
    out.incoherent.push_back(incoherent);
    out.coherent.push_back(value - incoherent);
  }
  return out;
}

double pair_phase_sum(std::span<const double> times, double omega) {
  double acc = 0.0;
  for (double ti : times) {
    for (double tj : times) acc += std::cos(omega * (ti - tj));
  }
  return acc;
}

SpectralDensity analytic_expected_density(const IonizationTimeDistribution& dist,
                                          const Wavepacket& wp, std::size_t n,
                                          std::span<const double> omega_grid) {
  validate(dist);
  validate(wp);
  check_grid(omega_grid);
  if (n < 1) throw ValidationError("emitter count must be >= 1");
  const double nn = static_cast<double>(n);
  SpectralDensity out;
  out.emitters = n;
  out.omega.assign(omega_grid.begin(), omega_grid.end());
  for (double w : omega_grid) {
    const double psi2 = spectral_weight(wp, w);
    const double incoherent = psi2 * nn;
    const double coherent = psi2 * nn * (nn - 1.0) * coherence_factor(dist, w);
    out.incoherent.push_back(incoherent);
    out.coherent.push_back(coherent);
    out.value.push_back(psi2 * (nn + nn * (nn - 1.0) * coherence_factor(dist, w)));
  }
  return out;
}

SpectralDensity monte_carlo_expected_density(const IonizationTimeDistribution& dist,
                                             const Wavepacket& wp, std::size_t n,
                                             std::size_t trials, std::uint64_t seed,
                                             std::span<const double> omega_grid,
                                             unsigned threads) {
  validate(dist);
  validate(wp);
  check_grid(omega_grid);
  if (n < 1) throw ValidationError("emitter count must be >= 1");
  if (trials < 2) throw ValidationError("Monte Carlo needs at least 2 trials");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const std::size_t m = omega_grid.size();
  std::vector<double> mean(m, 0.0);
  std::vector<double> m2(m, 0.0);

  // Trials are evaluated in batches (possibly in parallel) and then folded
  // into the running moments strictly in trial order.
  constexpr std::size_t kBatch = 512;
  std::vector<std::vector<double>> batch(std::min(kBatch, trials));
  std::size_t folded = 0;
  for (std::size_t start = 0; start < trials; start += kBatch) {
    const std::size_t count = std::min(kBatch, trials - start);
    auto work = [&](std::size_t first, std::size_t last) {
      for (std::size_t k = first; k < last; ++k) {
        auto engine = make_engine(seed, start + k);
        const auto times = sample_ionization_times(dist, n, engine);
        batch[k] = spectral_density_single_shot(times, wp, omega_grid).value;
      }
    };
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (workers <= 1) {
      work(0, count);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t per = (count + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t first = w * per;
        const std::size_t last = std::min(count, first + per);
        if (first < last) pool.emplace_back(work, first, last);
      }
    }
    for (std::size_t k = 0; k < count; ++k) {
      ++folded;
      const auto& row = batch[k];
      for (std::size_t i = 0; i < m; ++i) {
        const double delta = row[i] - mean[i];
        mean[i] += delta / static_cast<double>(folded);
        m2[i] += delta * (row[i] - mean[i]);
      }
    }
  }

  SpectralDensity out;
  out.emitters = n;
  out.omega.assign(omega_grid.begin(), omega_grid.end());
  out.value = mean;
  const double nt = static_cast<double>(trials);
  for (std::size_t i = 0; i < m; ++i) {
    const double var = m2[i] / (nt - 1.0);
    out.std_error.push_back(std::sqrt(std::max(var, 0.0) / nt));
    const double incoherent = spectral_weight(wp, omega_grid[i]) * static_cast<double>(n);
    out.incoherent.push_back(incoherent);
    out.coherent.push_back(mean[i] - incoherent);
  }
  return out;
}

double coherent_fraction(const SpectralDensity& density, double omega) {
  for (std::size_t i = 0; i < density.size(); ++i) {
    const double w = density.omega[i];
    if (w == omega || std::abs(w - omega) <= 1e-12 * std::max(std::abs(w), std::abs(omega))) {
      const double total = density.coherent[i] + density.incoherent[i];
      if (!(total > 0.0)) return 0.0;
      return std::clamp(density.coherent[i] / total, 0.0, 1.0);
    }
  }
  throw OffGrid(omega);
}

std::vector<double> default_omega_grid(double scale, std::size_t points) {
  if (!(scale > 0.0)) throw NonPositiveParameter("omega grid scale", scale);
  if (points < 2) throw ValidationError("omega grid needs at least 2 points");
  std::vector<double> grid(points);
  const double top = 8.0 / scale;
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = top * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

Table spectrum_table(const SpectralDensity& density) {
  Table t({"omega", "value", "stderr", "coherent", "incoherent", "coherent_fraction"});
  for (std::size_t i = 0; i < density.size(); ++i) {
    t.add_row(std::vector<double>{density.omega[i], density.value[i],
                                  density.has_std_error() ? density.std_error[i] : 0.0,
                                  density.coherent[i], density.incoherent[i],
                                  coherent_fraction(density, density.omega[i])});
  }
  return t;
}

}  // namespace auger
