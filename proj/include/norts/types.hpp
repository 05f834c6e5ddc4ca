#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace norts {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Input data violates an operation's precondition (too short, zero variance, bad argument).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A model specification is not admissible (non-stationary AR polynomial, GARCH persistence >= 1).
class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The computation itself broke down (singular system, non-positive variance estimate).
class NumericDegeneracy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Command-line misuse: unknown method names, malformed option values.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sink for non-fatal diagnostics. Defaults to stderr; tests and the CLI may redirect it.
using WarningHandler = void (*)(const std::string&);
WarningHandler set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

}  // namespace norts
