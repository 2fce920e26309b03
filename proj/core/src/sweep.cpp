#include "auger/sweep.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "auger/config.hpp"
#include "auger/errors.hpp"
#include "auger/steady_state.hpp"
#include "parallel.hpp"

namespace auger {
namespace {

struct PointResult {
  double x = 0.0;
  double j_ph = 0.0;
  std::optional<Regime> regime;
  double j_weak = 0.0;
  double j_saturated = 0.0;
};

PointResult evaluate_point(const SystemParams& base, SweepAxis axis, double x) {
  SystemParams p = base;
  if (axis == SweepAxis::pump) {
    p.w_p = x;
  } else {
    p.n_total = x;
  }
  try {
    validate_params(p);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(axis == SweepAxis::pump ? "w_p" : "n_total") + " = " +
                          format_double(x) + ": " + e.what());
  }
  PointResult r;
  r.x = x;
  r.j_ph = steady_current(p);
  if (p.w_p > 0.0) r.regime = classify_regime(p);
  r.j_weak = weak_limit_current(p);
  r.j_saturated = saturated_limit_current(p);
  return r;
}

std::vector<PointResult> evaluate(const SweepConfig& config, unsigned threads) {
  validate(config.grid);
  const auto grid = make_grid(config.grid);
  std::vector<PointResult> results(grid.size());
  detail::parallel_for(grid.size(), threads, [&](std::size_t i) {
    results[i] = evaluate_point(config.base, config.axis, grid[i]);
  });
  return results;
}

std::string regime_cell(const std::optional<Regime>& r) { return r ? to_string(*r) : "none"; }

}  // namespace

const char* to_string(SweepAxis a) { return a == SweepAxis::pump ? "pump" : "population"; }

SweepAxis sweep_axis_from_string(std::string_view s) {
  if (s == "pump") return SweepAxis::pump;
  if (s == "population") return SweepAxis::population;
  throw ValidationError("unknown sweep axis '" + std::string(s) + "' (pump|population)");
}

const char* to_string(GridScale s) { return s == GridScale::log ? "log" : "linear"; }

GridScale grid_scale_from_string(std::string_view s) {
  if (s == "log") return GridScale::log;
  if (s == "linear") return GridScale::linear;
  throw ValidationError("unknown grid scale '" + std::string(s) + "' (linear|log)");
}

void validate(const GridSpec& grid) {
  if (!std::isfinite(grid.min) || !std::isfinite(grid.max)) {
    throw ValidationError("grid bounds must be finite");
  }
  if (!(grid.min < grid.max)) throw ValidationError("grid needs min < max");
  if (grid.points < 2) throw ValidationError("grid needs at least 2 points");
  if (grid.scale == GridScale::log && !(grid.min > 0.0)) {
    throw ValidationError("log grid needs min > 0");
  }
}

std::vector<double> make_grid(const GridSpec& grid) {
  validate(grid);
  std::vector<double> out(grid.points);
  const double last = static_cast<double>(grid.points - 1);
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double u = static_cast<double>(i) / last;
    out[i] = grid.scale == GridScale::log
                 ? std::exp(std::log(grid.min) + u * (std::log(grid.max) - std::log(grid.min)))
                 : grid.min + u * (grid.max - grid.min);
  }
  out.front() = grid.min;
  out.back() = grid.max;
  return out;
}

Table run_pump_sweep(const SweepConfig& config, unsigned threads) {
  if (config.axis != SweepAxis::pump) throw ValidationError("run_pump_sweep needs sweep.axis = pump");
  Table t({"w_p", "j_ph", "regime", "j_weak", "j_saturated"});
  for (const auto& r : evaluate(config, threads)) {
    t.add_row(std::vector<std::string>{format_double(r.x), format_double(r.j_ph),
                                       regime_cell(r.regime), format_double(r.j_weak),
                                       format_double(r.j_saturated)});
  }
  return t;
}

Table run_population_sweep(const SweepConfig& config, unsigned threads) {
  if (config.axis != SweepAxis::population) {
    throw ValidationError("run_population_sweep needs sweep.axis = population");
  }
  Table t({"n_total", "j_ph", "regime"});
  for (const auto& r : evaluate(config, threads)) {
    t.add_row(std::vector<std::string>{format_double(r.x), format_double(r.j_ph),
                                       regime_cell(r.regime)});
  }
  return t;
}

AsymptoticSlopes sweep_slopes(const Table& sweep) {
  const auto x = sweep.numeric_column(sweep.has_column("w_p") ? "w_p" : "n_total");
  const auto y = sweep.numeric_column("j_ph");
  return outer_loglog_slopes(x, y);
}

}  // namespace auger
