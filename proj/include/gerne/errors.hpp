#pragma once

#include <stdexcept>
#include <string>

namespace gerne {

// Bad input: malformed config, malformed data file, out-of-range parameter.
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public ConfigError {
 public:
  explicit DataError(const std::string& msg) : ConfigError(msg) {}
};

// Requested beta would push some p_ext(a|y) outside [0,1]. Carries the
// violating group (1-based) and the offending probability.
class InfeasibleBetaError : public ConfigError {
 public:
  InfeasibleBetaError(double beta, int y, int a, double p)
      : ConfigError("infeasible beta " + std::to_string(beta) + ": p_ext(a=" +
                    std::to_string(a) + "|y=" + std::to_string(y) + ") = " +
                    std::to_string(p) + " outside [0,1]"),
        beta(beta),
        label(y),
        attribute(a),
        p_value(p) {}

  double beta;
  int label;
  int attribute;
  double p_value;
};

// Non-finite loss encountered during training. Exit code 3.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(int epoch, const std::string& what_diverged)
      : std::runtime_error("training diverged at epoch " +
                           std::to_string(epoch) + " (" + what_diverged + ")"),
        epoch(epoch) {}

  int epoch;
};

}  // namespace gerne
