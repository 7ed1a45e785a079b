#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "speclab/cheeger.hpp"
#include "speclab/eigensolver.hpp"
#include "speclab/errors.hpp"
#include "speclab/generators.hpp"

using namespace speclab;

namespace {

RevolutionMesh dumbbell() {
  RevolutionProfile p;
  // Two cones joined through a neck whose crossing edges are short.
  p.s = {0, 1, 2, 2.02, 3.02, 4.02};
  p.rho = {0, 1, 0.02, 0.02, 1, 0};
  p.segments = 3;
  return build_revolution_mesh(p);
}

std::vector<TriMesh> tiny_meshes() {
  return {tetrahedron(), octahedron(), icosphere(0), flat_torus(3, 4, 1.0, 1.3), conformal_torus(4, 4, 1, 1, 0.3),
          dumbbell().mesh};
}

}  // namespace

TEST(Cheeger, DiscreteInequalityHolds) {
  for (const auto& m : tiny_meshes()) {
    const auto c = brute_cheeger(m);
    const double lambda1 = dense_eigs_oracle(cotan_laplacian(m)).values(1);
    EXPECT_GT(c.h, 0.0);
    EXPECT_GE(lambda1, c.h * c.h / c.discrete_constant * (1 - 1e-12));
    EXPECT_GE(lambda1, c.h_weighted * c.h_weighted / (2 * c.d_max) * (1 - 1e-12));
    EXPECT_GE(c.h_weighted, c.kappa * c.h * (1 - 1e-12));
  }
}

TEST(Cheeger, CutsThroughTheNeck) {
  const auto d = dumbbell();
  const auto c = brute_cheeger(d.mesh);
  // The optimal side is the first cone up to and including the first neck ring.
  std::vector<int> half{d.ring_vertices[0][0]};
  for (int j = 1; j <= 2; ++j)
    for (int v : d.ring_vertices[j]) half.push_back(v);
  std::sort(half.begin(), half.end());
  EXPECT_EQ(c.subset, half);
  // Hand value: three legs of 0.02 and three diagonals across the neck, over half the area.
  const double w = 2 * 0.02 * std::sin(std::numbers::pi / 3);
  const double cut = 3 * 0.02 + 3 * std::hypot(w, 0.02);
  EXPECT_NEAR(c.h, cut / (0.5 * total_area(d.mesh)), 1e-12);
}

TEST(Cheeger, RelabelingInvariant) {
  auto m = octahedron();
  const double h = brute_cheeger(m).h;
  const int n = m.vertex_count();
  std::reverse(m.vertices.begin(), m.vertices.end());
  for (auto& f : m.faces)
    for (int& v : f) v = n - 1 - v;
  EXPECT_NEAR(brute_cheeger(m).h, h, 1e-12 * h);
}

TEST(Cheeger, TooLarge) { EXPECT_THROW(brute_cheeger(icosphere(1)), PreconditionError); }
