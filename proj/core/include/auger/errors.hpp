#pragma once

#include <stdexcept>
#include <string>

namespace auger {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs rejected before any computation (bad parameters, config, grids).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The computation itself failed (integrator blow-up, step budget).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NonPositiveParameter : public ValidationError {
 public:
  NonPositiveParameter(std::string field, double value);
  const std::string& field() const noexcept { return field_; }
  double value() const noexcept { return value_; }

 private:
  std::string field_;
  double value_;
};

class NegativeParameter : public ValidationError {
 public:
  NegativeParameter(std::string field, double value);
  const std::string& field() const noexcept { return field_; }
  double value() const noexcept { return value_; }

 private:
  std::string field_;
  double value_;
};

class NonFiniteParameter : public ValidationError {
 public:
  explicit NonFiniteParameter(std::string field);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class ParameterOutOfRange : public ValidationError {
 public:
  ParameterOutOfRange(std::string field, double value, double lo, double hi);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Level energies must satisfy E0 = 0 < E1 < E2 < E3.
class EnergyOrdering : public ValidationError {
 public:
  explicit EnergyOrdering(const std::string& what) : ValidationError(what) {}
};

/// Work function outside the emission window E3 < W < 2 E2.
class WorkFunctionOutOfWindow : public ValidationError {
 public:
  WorkFunctionOutOfWindow(double e3, double work_function, double two_e2);
  double e3() const noexcept { return e3_; }
  double work_function() const noexcept { return w_; }
  double two_e2() const noexcept { return two_e2_; }

 private:
  double e3_;
  double w_;
  double two_e2_;
};

/// Regime and ODE cross-checks are undefined without pumping.
class ZeroPump : public ValidationError {
 public:
  ZeroPump() : ValidationError("w_p = 0: pumping is off, regime undefined") {}
};

class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownKey : public ConfigError {
 public:
  explicit UnknownKey(std::string key);
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class MissingKey : public ConfigError {
 public:
  explicit MissingKey(std::string key);
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class StepLimitExceeded : public NumericalError {
 public:
  StepLimitExceeded(long steps, double t_reached, double t_end);
};

class NonFiniteState : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class OffGrid : public ValidationError {
 public:
  explicit OffGrid(double omega);
};

class EmptyTable : public ValidationError {
 public:
  EmptyTable() : ValidationError("cannot plot an empty table") {}
};

}  // namespace auger
