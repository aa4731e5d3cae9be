#pragma once

#include <stdexcept>
#include <string>

namespace thermaldose {

/// Base of all model-level failures. Configuration mistakes and physically
/// infeasible requests are distinguished so the CLI can map them to exit codes.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: bad parameter values, grids, names.
class ConfigError : public ModelError {
 public:
  using ModelError::ModelError;
};

/// Request that no power level can realize.
class InfeasibleError : public ModelError {
 public:
  using ModelError::ModelError;
};

class NonPositivePower : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class InvalidGrid : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class UnknownParameter : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class UnstableConfig : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Flight action requested at or before the reaction time has elapsed.
class FlightTimeTooSmall : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

/// A monotone target is never crossed inside the search interval.
class NoBracket : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

}  // namespace thermaldose
