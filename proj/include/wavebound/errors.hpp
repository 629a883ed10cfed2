#pragma once

#include <stdexcept>
#include <string>

namespace wavebound {

/// Bad input: violated precondition, malformed config, invalid flag.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Base of every failure that comes out of the numerics rather than the input.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NoConvergence : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class VacuumGenerated : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class ImaginarySoundSpeed : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class DegenerateSpeeds : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class ZeroMaxSpeed : public NumericalError {
public:
  using NumericalError::NumericalError;
};

} // namespace wavebound
