#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace speclab {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedFunctionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& what, std::vector<double> best = {})
      : std::runtime_error(what), best_residuals(std::move(best)) {}
  std::vector<double> best_residuals;
};

struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace speclab
