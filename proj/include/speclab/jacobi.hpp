#pragma once

#include <Eigen/Dense>

namespace speclab {

struct JacobiResult {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns, orthonormal; empty unless requested
  int sweeps = 0;
};

// Cyclic Jacobi rotations on a symmetric matrix (only the upper triangle is read).
JacobiResult jacobi_eigen(const Eigen::MatrixXd& a, bool want_vectors);

}  // namespace speclab
