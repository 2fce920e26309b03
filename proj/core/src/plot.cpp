#include "auger/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "auger/errors.hpp"

namespace auger {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                   "#9467bd", "#8c564b", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

struct Axis {
  bool log = false;
  double lo = 0.0;  // in transformed units
  double hi = 1.0;

  double transform(double v) const { return log ? std::log10(v) : v; }
  bool placeable(double v) const { return std::isfinite(v) && (!log || v > 0.0); }
};

Axis make_axis(const std::vector<double>& values, bool log) {
  Axis a;
  a.log = log;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : values) {
    if (!a.placeable(v)) continue;
    lo = std::min(lo, a.transform(v));
    hi = std::max(hi, a.transform(v));
  }
  if (!std::isfinite(lo)) {
    lo = 0.0;
    hi = 1.0;
  }
  if (log) {
    lo = std::floor(lo);
    hi = std::ceil(hi);
  }
  if (hi <= lo) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.5;
    lo -= log ? 1.0 : pad;
    hi += log ? 1.0 : pad;
  }
  a.lo = lo;
  a.hi = hi;
  return a;
}

std::vector<std::pair<double, std::string>> ticks(const Axis& a) {
  std::vector<std::pair<double, std::string>> out;
  if (a.log) {
    const int first = static_cast<int>(a.lo);
    const int last = static_cast<int>(a.hi);
    const int stride = std::max(1, (last - first) / 8);
    for (int e = first; e <= last; e += stride) out.emplace_back(e, "1e" + std::to_string(e));
  } else {
    for (int i = 0; i <= 5; ++i) {
      const double v = a.lo + (a.hi - a.lo) * i / 5.0;
      out.emplace_back(v, fmt(v));
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  std::vector<double> xs, ys;
  for (const auto& s : spec.series) {
    xs.insert(xs.end(), s.x.begin(), s.x.end());
    ys.insert(ys.end(), s.y.begin(), s.y.end());
  }
  const Axis ax = make_axis(xs, spec.log_x);
  const Axis ay = make_axis(ys, spec.log_y);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double v) { return kLeft + (ax.transform(v) - ax.lo) / (ax.hi - ax.lo) * plot_w; };
  auto sy = [&](double v) {
    return kTop + plot_h - (ay.transform(v) - ay.lo) / (ay.hi - ay.lo) * plot_h;
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kWidth) + "\" height=\"" +
         px(kHeight) + "\" viewBox=\"0 0 " + px(kWidth) + " " + px(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + px(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
         escape(spec.title) + "</text>\n";
  out += "<rect x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" + px(plot_w) +
         "\" height=\"" + px(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";

  out += "<g font-size=\"11\" stroke=\"none\" fill=\"black\">\n";
  for (const auto& [v, label] : ticks(ax)) {
    const double x = kLeft + (v - ax.lo) / (ax.hi - ax.lo) * plot_w;
    out += "<line x1=\"" + px(x) + "\" y1=\"" + px(kTop + plot_h) + "\" x2=\"" + px(x) +
           "\" y2=\"" + px(kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + px(x) + "\" y=\"" + px(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">" + escape(label) + "</text>\n";
  }
  for (const auto& [v, label] : ticks(ay)) {
    const double y = kTop + plot_h - (v - ay.lo) / (ay.hi - ay.lo) * plot_h;
    out += "<line x1=\"" + px(kLeft - 5) + "\" y1=\"" + px(y) + "\" x2=\"" + px(kLeft) +
           "\" y2=\"" + px(y) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + px(kLeft - 8) + "\" y=\"" + px(y + 4) + "\" text-anchor=\"end\">" +
           escape(label) + "</text>\n";
  }
  out += "</g>\n";
  out += "<text x=\"" + px(kLeft + plot_w / 2) + "\" y=\"" + px(kHeight - 16) +
         "\" text-anchor=\"middle\" font-size=\"13\">" + escape(spec.x_label) + "</text>\n";
  out += "<text transform=\"translate(20 " + px(kTop + plot_h / 2) +
         ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">" + escape(spec.y_label) +
         "</text>\n";

  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const auto& s = spec.series[i];
    const char* color = kColors[i % std::size(kColors)];
    std::string points;
    for (std::size_t k = 0; k < std::min(s.x.size(), s.y.size()); ++k) {
      if (!ax.placeable(s.x[k]) || !ay.placeable(s.y[k])) continue;
      if (!points.empty()) points += ' ';
      points += px(sx(s.x[k])) + "," + px(sy(s.y[k]));
    }
    out += "<polyline class=\"series\" data-label=\"" + escape(s.label) +
           "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.8\" points=\"" + points +
           "\"/>\n";
    const double ly = kTop + 16.0 + 20.0 * static_cast<double>(i);
    const double lx = kLeft + plot_w + 12.0;
    out += "<line x1=\"" + px(lx) + "\" y1=\"" + px(ly) + "\" x2=\"" + px(lx + 24) + "\" y2=\"" +
           px(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + px(lx + 30) + "\" y=\"" + px(ly + 4) + "\" font-size=\"12\">" +
           escape(s.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

PlotSpec plot_spec_for(const Table& table, PlotKind kind, bool log_x) {
  if (table.empty()) throw EmptyTable();
  PlotSpec spec;
  spec.log_x = log_x;
  auto add = [&](const char* x_col, const char* y_col, std::string label) {
    spec.series.push_back({std::move(label), table.numeric_column(x_col), table.numeric_column(y_col)});
  };
  switch (kind) {
    case PlotKind::pump_sweep:
      spec.title = "Photocurrent vs pump rate";
      spec.x_label = "pump rate w_p [1/s]";
      spec.y_label = "photocurrent J_ph [1/s]";
      spec.log_y = true;
      add("w_p", "j_ph", "full steady state");
      add("w_p", "j_weak", "weak-pump limit");
      add("w_p", "j_saturated", "saturated limit");
      break;
    case PlotKind::population_sweep:
      spec.title = "Photocurrent vs total population";
      spec.x_label = "total population N";
      spec.y_label = "photocurrent J_ph [1/s]";
      spec.log_y = true;
      add("n_total", "j_ph", "steady state");
      break;
    case PlotKind::trajectory:
      spec.title = "Level populations";
      spec.x_label = "time [s]";
      spec.y_label = "population";
      spec.log_y = true;
      for (const char* col : {"n0", "n1", "n2", "n3", "n_a"}) add("t", col, col);
      break;
    case PlotKind::decay:
      spec.title = "Metastable-level decay";
      spec.x_label = "time [s]";
      spec.y_label = "N2";
      spec.log_y = true;
      add("t", "n2_radiative", "radiative");
      add("t", "n2_auger", "Auger");
      break;
    case PlotKind::spectrum:
      spec.title = "Collective spectral density";
      spec.x_label = "omega [rad/s]";
      spec.y_label = "rho(omega)";
      add("omega", "value", "total");
      add("omega", "coherent", "coherent");
      add("omega", "incoherent", "incoherent");
      break;
  }
  return spec;
}

std::string emit_plot(const Table& table, PlotKind kind, bool log_x) {
  return render_svg(plot_spec_for(table, kind, log_x));
}

}  // namespace auger
