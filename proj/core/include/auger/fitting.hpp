#pragma once

#include <span>

namespace auger {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Ordinary least squares y = slope x + intercept.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// OLS on (ln x, ln y); every value must be > 0.
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

struct AsymptoticSlopes {
  LineFit low;
  LineFit high;
};

/// Log-log fits restricted to the first and last `fraction` of the samples
/// (at least two points each), so a bend in the middle does not leak into
/// either asymptote.
AsymptoticSlopes outer_loglog_slopes(std::span<const double> x, std::span<const double> y,
                                     double fraction = 0.25);

}  // namespace auger
