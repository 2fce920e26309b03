#pragma once

#include <string>
#include <vector>

#include "auger/table.hpp"

namespace auger {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<PlotSeries> series;
};

/// Standalone SVG document, one polyline per series. Points that cannot be
/// placed on a log axis (<= 0) are dropped.
std::string render_svg(const PlotSpec& spec);

enum class PlotKind { pump_sweep, population_sweep, trajectory, decay, spectrum };

/// Builds the figure for a table produced by the matching runner. Throws
/// EmptyTable.
PlotSpec plot_spec_for(const Table& table, PlotKind kind, bool log_x);
std::string emit_plot(const Table& table, PlotKind kind, bool log_x);

}  // namespace auger
