#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

namespace speclab {

class SymMatrix {
 public:
  explicit SymMatrix(Eigen::MatrixXd entries);
  int n() const { return int(a_.rows()); }
  const Eigen::MatrixXd& entries() const { return a_; }

 private:
  Eigen::MatrixXd a_;
};

std::vector<double> sym_eigenvalues(const SymMatrix& a);

// Each residual is bound minus measured quantity; nullopt when the inputs fail
// the preconditions (a rejected sample, not a failure).
std::optional<double> prop_a1_residual(const SymMatrix& a, double eta);
std::pair<double, double> lemma_a2_residuals(const std::vector<double>& x);
std::optional<double> lemma_a3_residual(const SymMatrix& a, double eta_prime);
std::optional<bool> quasi_isometry_check(const SymMatrix& a, double eta);

using Rng = std::mt19937_64;

Eigen::MatrixXd random_orthogonal(int n, Rng& rng);

struct SuiteResult {
  std::string suite;
  int n = 0;
  long accepted = 0;
  long rejected = 0;
  long violations = 0;
  double worst_residual = 0.0;  // most negative (or smallest) residual seen
  std::vector<double> worst_sample;
  double worst_parameter = 0.0;
};

// suite: "prop-a1", "lemma-a2", "lemma-a3", "quasi-isometry"
SuiteResult run_stability_suite(const std::string& suite, int n, long accepted_target,
                                std::uint64_t seed, double slack = 1e-12);

nlohmann::json suite_to_json(const SuiteResult& r);

}  // namespace speclab
