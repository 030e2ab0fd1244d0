#pragma once

#include <stdexcept>
#include <string>

// Error taxonomy. Three branches, mapped to process exit codes by the CLI:
//   ConfigError   -> 2   (bad input text, bad values, unknown keys)
//   PhysicsError  -> 3   (model leaves its domain of validity)
//   NumericsError -> 4   (a numerical scheme failed to converge)

namespace holeprobe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------ config

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ConfigError {
 public:
  ParseError(const std::string& key, const std::string& reason)
      : ConfigError("parse error: " + key + ": " + reason), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class UnknownParameterError : public ConfigError {
 public:
  explicit UnknownParameterError(const std::string& key)
      : ConfigError("unknown parameter: " + key), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class ValidationError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// ------------------------------------------------------------ physics

class PhysicsError : public Error {
 public:
  using Error::Error;
};

// beam footprint does not fit inside the crystal
class BeamOverfillError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// burnt-edge functions cross: the hole has collapsed
class EdgeCrossingError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// a displaced hole edge reaches the carrier (zero detuning)
class EdgeTouchesCarrierError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// a per-ion expression was requested exactly on resonance
class ZeroDetuningError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// closed-form denominator g*gradB - k*Xbar vanishes (removable limit)
class GradientSmearDegenerateError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// argument of a log term left its domain
class LogDomainError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// ------------------------------------------------------------ numerics

class NumericsError : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

class NonConvergentError : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

}  // namespace holeprobe
