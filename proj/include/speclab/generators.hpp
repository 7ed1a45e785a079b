#pragma once

#include <vector>

#include "speclab/mesh.hpp"

namespace speclab {

TriMesh icosphere(int subdiv, double radius = 1.0);
TriMesh tetrahedron();
TriMesh octahedron();

// m x k periodic grid carrying the flat metric of [0,L1) x [0,L2).
TriMesh flat_torus(int m, int k, double L1, double L2);
// Same grid with every edge length scaled by 1 + a sin(2 pi x/L1) sin(2 pi y/L2) at its midpoint.
TriMesh conformal_torus(int m, int k, double L1, double L2, double a);

// Metric ds^2 + rho(s)^2 dphi^2 sampled on rings. Entries with a pole flag at
// either end collapse to a single vertex (rho must be 0 there); otherwise that
// end is a boundary circle. Quads become isosceles trapezoids when the radius
// change is mild and per-face rectangles otherwise.
struct RevolutionProfile {
  std::vector<double> s;
  std::vector<double> rho;
  int segments = 24;
  bool pole_start = true;
  bool pole_end = true;
};

struct RevolutionMesh {
  TriMesh mesh;
  // vertex index of ring entry j at angular position q; poles repeat their single index.
  std::vector<std::vector<int>> ring_vertices;
};

RevolutionMesh build_revolution_mesh(const RevolutionProfile& profile);

}  // namespace speclab
