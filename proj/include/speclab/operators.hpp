#pragma once

#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "speclab/mesh.hpp"

namespace speclab {

using SparseMatrix = Eigen::SparseMatrix<double>;

struct OperatorPair {
  SparseMatrix stiffness;  // cotangent weights, PSD, zero row sums
  Eigen::VectorXd mass;    // lumped vertex areas
};

OperatorPair cotan_laplacian(const TriMesh& mesh);

// Keeps only the listed vertices (zero Dirichlet data on the rest).
OperatorPair restrict_to(const OperatorPair& ops, const std::vector<int>& keep);

double rayleigh(const OperatorPair& ops, const Eigen::VectorXd& f);
double rayleigh(const TriMesh& mesh, const Eigen::VectorXd& f);

}  // namespace speclab
