// errors.hpp
#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A coordinate fell outside the declared z-domain of a metric model.
class OutOfDomainError : public Error {
public:
  using Error::Error;
};

/// A metric violates the (+,-,-,-) signature or one of the derived
/// positivity conditions. The message names the failed inequality.
class InvalidMetricError : public Error {
public:
  using Error::Error;
};

/// Requested evaluation lies below the documented accuracy floor.
class AccuracyError : public Error {
public:
  using Error::Error;
};

/// Two independent routes to the same number disagreed.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// A series or quadrature failed to reach its stated bound.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// Malformed input (cavity, config file, fixture file).
class InputError : public Error {
public:
  using Error::Error;
};

}  // namespace casimir
