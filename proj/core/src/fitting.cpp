#include "auger/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "auger/errors.hpp"

namespace auger {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("fit: x and y differ in length");
  if (x.size() < 2) throw ValidationError("fit: need at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw ValidationError("fit: x values are all equal");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.points = x.size();
  return fit;
}

LineFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("fit: x and y differ in length");
  std::vector<double> lx, ly;
  lx.reserve(x.size());
  ly.reserve(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw ValidationError("log-log fit needs strictly positive data");
    }
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  return fit_line(lx, ly);
}

AsymptoticSlopes outer_loglog_slopes(std::span<const double> x, std::span<const double> y,
                                     double fraction) {
  if (x.size() != y.size()) throw ValidationError("fit: x and y differ in length");
  if (!(fraction > 0.0 && fraction <= 0.5)) {
    throw ValidationError("outer fraction must lie in (0, 0.5]");
  }
  const auto k = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::floor(fraction * static_cast<double>(x.size()))));
  if (x.size() < k) throw ValidationError("fit: not enough points for the outer windows");
  AsymptoticSlopes out;
  out.low = fit_loglog(x.first(k), y.first(k));
  out.high = fit_loglog(x.last(k), y.last(k));
  return out;
}

}  // namespace auger
