#include "auger/errors.hpp"

#include <sstream>

namespace auger {
namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

NonPositiveParameter::NonPositiveParameter(std::string field, double value)
    : ValidationError("parameter " + field + " must be > 0 (got " + num(value) + ")"),
      field_(std::move(field)),
      value_(value) {}

NegativeParameter::NegativeParameter(std::string field, double value)
    : ValidationError("parameter " + field + " must be >= 0 (got " + num(value) + ")"),
      field_(std::move(field)),
      value_(value) {}

NonFiniteParameter::NonFiniteParameter(std::string field)
    : ValidationError("parameter " + field + " is not finite"), field_(std::move(field)) {}

ParameterOutOfRange::ParameterOutOfRange(std::string field, double value, double lo, double hi)
    : ValidationError("parameter " + field + " = " + num(value) + " outside [" + num(lo) + ", " +
                      num(hi) + "]"),
      field_(std::move(field)) {}

WorkFunctionOutOfWindow::WorkFunctionOutOfWindow(double e3, double work_function, double two_e2)
    : ValidationError("work_function " + num(work_function) + " outside emission window (E3 = " +
                      num(e3) + ", 2*E2 = " + num(two_e2) + ")"),
      e3_(e3),
      w_(work_function),
      two_e2_(two_e2) {}

UnknownKey::UnknownKey(std::string key)
    : ConfigError("unknown key '" + key + "'"), key_(std::move(key)) {}

MissingKey::MissingKey(std::string key)
    : ConfigError("missing key '" + key + "'"), key_(std::move(key)) {}

StepLimitExceeded::StepLimitExceeded(long steps, double t_reached, double t_end)
    : NumericalError("step limit " + std::to_string(steps) + " exceeded at t = " + num(t_reached) +
                     " (t_end = " + num(t_end) + ")") {}

OffGrid::OffGrid(double omega) : ValidationError("omega " + num(omega) + " is not on the grid") {}

}  // namespace auger
