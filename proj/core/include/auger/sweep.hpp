#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "auger/fitting.hpp"
#include "auger/model.hpp"
#include "auger/table.hpp"

namespace auger {

enum class SweepAxis { pump, population };
enum class GridScale { linear, log };

const char* to_string(SweepAxis a);
SweepAxis sweep_axis_from_string(std::string_view s);
const char* to_string(GridScale s);
GridScale grid_scale_from_string(std::string_view s);

struct GridSpec {
  double min = 1.0;
  double max = 10.0;
  std::size_t points = 2;
  GridScale scale = GridScale::log;
};

void validate(const GridSpec& grid);
/// Endpoints are exact; interior points are linear or geometric.
std::vector<double> make_grid(const GridSpec& grid);

struct SweepConfig {
  SystemParams base;
  SweepAxis axis = SweepAxis::pump;
  GridSpec grid;
  bool write_table = true;
  bool write_plot = true;
  std::filesystem::path output_dir = ".";
  std::uint64_t seed = 0;
};

/// Columns w_p, j_ph, regime, j_weak, j_saturated; one row per grid point in
/// grid order. A point that fails validation aborts with its w_p named.
Table run_pump_sweep(const SweepConfig& config, unsigned threads = 1);

/// Columns n_total, j_ph, regime at the base w_p.
Table run_population_sweep(const SweepConfig& config, unsigned threads = 1);

/// Outer-quarter log-log slopes of j_ph against the swept column.
AsymptoticSlopes sweep_slopes(const Table& sweep);

}  // namespace auger
