#pragma once

#include <vector>

#include "speclab/mesh.hpp"

namespace speclab {

struct CheegerResult {
  double h = 0.0;            // min over subsets of cut length / min(area side, area complement)
  std::vector<int> subset;   // a minimizing side (never contains the last vertex)
  // Discrete inequality lambda_1 >= h^2 / discrete_constant, where
  // discrete_constant = 2 d_max / kappa^2 with positive edge weights
  // c_e = sum over faces of area / (3 l_e^2), kappa = min c_e / l_e and
  // d_max = max over vertices of (sum of incident c_e) / vertex area.
  double discrete_constant = 0.0;
  double h_weighted = 0.0;   // same ratio with c_e as cut weights
  double d_max = 0.0;
  double kappa = 0.0;
};

CheegerResult brute_cheeger(const TriMesh& mesh, int max_vertices = 20);

}  // namespace speclab
