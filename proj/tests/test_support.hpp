#pragma once

#include <cmath>
#include <filesystem>
#include <random>
#include <string>

#include "auger/model.hpp"

namespace auger::testing {

/// Reference parameter set: w_p = 1e3 /s, lifetimes 1e-7 s, metastable 1e-3 s.
inline SystemParams reference_scale() {
  SystemParams p;
  p.w_p = 1e3;
  p.tau_1 = 1e-7;
  p.tau_3 = 1e-7;
  p.tau_sp = 1e-3;
  p.gamma_A = 1e-9;
  p.n_total = 1e10;
  p.beta = 0.1;
  p.energies = {0.0, 1.0, 2.0, 3.0};
  p.work_function = 3.5;
  return p;
}

inline SystemParams unit_params(double w_p, double gamma_A, double n_total) {
  SystemParams p = reference_scale();
  p.w_p = w_p;
  p.gamma_A = gamma_A;
  p.n_total = n_total;
  p.beta = 1.0;
  return p;
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log10(lo), std::log10(hi));
  return std::pow(10.0, u(rng));
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("auger_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace auger::testing
