#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "speclab/operators.hpp"

namespace speclab {

struct SpectrumResult {
  Eigen::VectorXd values;     // ascending
  Eigen::MatrixXd vectors;    // columns, M-orthonormal
  Eigen::VectorXd residuals;  // ||S v - lambda M v||
};

struct EigOptions {
  double tol = 1e-10;
  std::uint64_t seed = 20240601;
  int max_runs = 200;
};

// Smallest eigenpairs of S v = lambda M v by shift-invert Lanczos on
// M^{1/2} (S + tau M)^{-1} M^{1/2} with full reorthogonalization. Converged
// pairs are locked and the search restarts in their complement until the
// complement's bottom eigenvalue clears the requested window, so repeated
// eigenvalues are found with their multiplicity. A pair converges when its
// residual is below tol * max(|lambda|, shift) plus a rounding floor proportional
// to a Gershgorin bound on the operator.
SpectrumResult smallest_eigs(const OperatorPair& ops, int count, const EigOptions& opt = {});

// Full spectrum by dense Jacobi on M^{-1/2} S M^{-1/2}; dimension <= 400.
SpectrumResult dense_eigs_oracle(const OperatorPair& ops);

// Spectral scale used as the shift and as the floor of the relative residual test.
double spectral_shift(const OperatorPair& ops);

}  // namespace speclab
