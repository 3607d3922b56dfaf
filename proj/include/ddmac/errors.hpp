#pragma once

#include <stdexcept>
#include <string>

namespace ddmac {

/// Operand sizes do not agree (vector lengths, matrix shapes).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric argument lies outside the domain of the function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parity-check matrix does not define a valid code (e.g. rank deficient).
class InvalidCodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested construction exceeds the configured memory budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Probability table is negative somewhere or does not normalise.
class InvalidDistributionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Experiment setup violates a precondition (e.g. input constraint).
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Covariance or variance structure is singular.
class DegenerateConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monte-Carlo estimate cannot be trusted at the requested budget.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ddmac
