#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "speclab/eigensolver.hpp"
#include "speclab/errors.hpp"
#include "speclab/generators.hpp"

using namespace speclab;

namespace {

// Exact spectrum of the cotangent Laplacian on a regular right-triangle grid:
// it reduces to the five-point stencil, eigenvalues 4 sin^2(pi p/m)/dx^2 + 4 sin^2(pi q/k)/dy^2.
std::vector<double> grid_torus_spectrum(int m, int k, double L1, double L2) {
  std::vector<double> out;
  const double dx = L1 / m, dy = L2 / k;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < k; ++q) {
      const double a = std::sin(std::numbers::pi * p / m), b = std::sin(std::numbers::pi * q / k);
      out.push_back(4 * a * a / (dx * dx) + 4 * b * b / (dy * dy));
    }
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::VectorXd eigen_reference(const OperatorPair& ops) {
  const Eigen::VectorXd d = ops.mass.cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd c = d.asDiagonal() * Eigen::MatrixXd(ops.stiffness) * d.asDiagonal();
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(c, Eigen::EigenvaluesOnly).eigenvalues();
}

std::vector<TriMesh> small_meshes() {
  RevolutionProfile p;
  for (int j = 0; j <= 12; ++j) {
    const double s = std::numbers::pi * j / 12;
    p.s.push_back(s);
    p.rho.push_back(j == 0 || j == 12 ? 0.0 : 0.8 * std::sin(s) + 0.1 * std::sin(2 * s));
  }
  p.segments = 16;
  return {icosphere(2), flat_torus(12, 12, 1, 1), flat_torus(10, 14, 1.0, 1.7), conformal_torus(15, 17, 2, 1, 0.3),
          build_revolution_mesh(p).mesh};
}

double rel_err(double got, double ref, double lambda1) {
  return std::abs(got - ref) / std::max(std::abs(ref), lambda1);
}

}  // namespace

TEST(Dense, TetrahedronByHand) {
  // Equilateral faces: every cot weight is 1/sqrt(3), every vertex mass is the face area 2 sqrt(3).
  const auto r = dense_eigs_oracle(cotan_laplacian(tetrahedron()));
  ASSERT_EQ(r.values.size(), 4);
  EXPECT_NEAR(r.values(0), 0.0, 1e-14);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(r.values(i), 2.0 / 3.0, 1e-14);
}

TEST(Dense, AgreesWithEigenAndTrace) {
  for (const auto& m : small_meshes()) {
    const auto ops = cotan_laplacian(m);
    const auto r = dense_eigs_oracle(ops);
    const auto ref = eigen_reference(ops);
    ASSERT_EQ(r.values.size(), m.vertex_count());
    for (int i = 0; i < ref.size(); ++i) EXPECT_NEAR(r.values(i), ref(i), 1e-10 * ref.cwiseAbs().maxCoeff());
    double tr = 0;
    for (int i = 0; i < m.vertex_count(); ++i) tr += ops.stiffness.coeff(i, i) / ops.mass(i);
    EXPECT_NEAR(r.values.sum(), tr, 1e-10 * tr);
  }
}

TEST(Dense, TooLarge) { EXPECT_THROW(dense_eigs_oracle(cotan_laplacian(icosphere(3))), PreconditionError); }

TEST(Lanczos, MatchesDenseOracle) {
  for (const auto& m : small_meshes()) {
    const auto ops = cotan_laplacian(m);
    const auto dense = dense_eigs_oracle(ops);
    const int count = std::min(10, m.vertex_count() / 4);
    const auto r = smallest_eigs(ops, count);
    for (int i = 0; i < count; ++i) EXPECT_LE(rel_err(r.values(i), dense.values(i), dense.values(1)), 1e-8) << i;
  }
}

TEST(Lanczos, OrthonormalAndSmallResiduals) {
  const auto ops = cotan_laplacian(conformal_torus(20, 20, 1, 1, 0.2));
  EigOptions opt;
  const auto r = smallest_eigs(ops, 12, opt);
  const Eigen::MatrixXd gram = r.vectors.transpose() * ops.mass.asDiagonal() * r.vectors;
  EXPECT_LT((gram - Eigen::MatrixXd::Identity(12, 12)).cwiseAbs().maxCoeff(), 1e-8);
  const double tau = spectral_shift(ops);
  const Eigen::VectorXd inv_root = ops.mass.cwiseSqrt().cwiseInverse();
  for (int i = 0; i < 12; ++i) {
    const Eigen::VectorXd v = r.vectors.col(i);
    const Eigen::VectorXd res = inv_root.cwiseProduct(ops.stiffness * v - r.values(i) * ops.mass.cwiseProduct(v));
    EXPECT_LE(res.norm(), 10 * opt.tol * std::max(std::abs(r.values(i)), tau));
  }
  EXPECT_LE(std::abs(r.values(0)), 1e-10 * r.values(1));
}

TEST(Lanczos, TorusGridExactSpectrum) {
  const auto ops = cotan_laplacian(flat_torus(24, 18, 2.0, 1.5));
  const auto ref = grid_torus_spectrum(24, 18, 2.0, 1.5);
  const auto r = smallest_eigs(ops, 20);
  for (int i = 0; i < 20; ++i) EXPECT_LE(rel_err(r.values(i), ref[i], ref[1]), 1e-9) << i;
}

TEST(Lanczos, MultiplicityFourOnSquareTorus) {
  const double L = 2 * std::numbers::pi;
  const auto r = smallest_eigs(cotan_laplacian(flat_torus(64, 64, L, L)), 9);
  for (int i = 1; i <= 4; ++i) EXPECT_NEAR(r.values(i), 1.0, 0.02);
  for (int i = 5; i <= 8; ++i) EXPECT_NEAR(r.values(i), 2.0, 0.04);
}

TEST(Lanczos, SphereClusters) {
  const auto r = smallest_eigs(cotan_laplacian(icosphere(4)), 9);
  for (int i = 1; i <= 3; ++i) EXPECT_NEAR(r.values(i), 2.0, 0.04);
  for (int i = 4; i <= 8; ++i) EXPECT_NEAR(r.values(i), 6.0, 0.12);
}

TEST(Lanczos, SphereRefinementConverges) {
  double prev_err = INFINITY;
  for (int s = 2; s <= 5; ++s) {
    const auto r = smallest_eigs(cotan_laplacian(icosphere(s)), 4);
    const double err = std::abs(r.values(1) - 2.0);
    EXPECT_LT(err, prev_err);
    if (s > 2) EXPECT_LT(err, 0.4 * prev_err);  // roughly quarters each level
    prev_err = err;
  }
}

TEST(Lanczos, DeterministicForSeed) {
  const auto ops = cotan_laplacian(icosphere(3));
  const auto a = smallest_eigs(ops, 10), b = smallest_eigs(ops, 10);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.values(i), b.values(i));
}

TEST(Lanczos, Preconditions) {
  const auto ops = cotan_laplacian(icosphere(1));
  EXPECT_THROW(smallest_eigs(ops, 11), PreconditionError);
  EXPECT_THROW(smallest_eigs(ops, 0), PreconditionError);
}

TEST(Lanczos, RunBudgetExhaustedCarriesResiduals) {
  EigOptions opt;
  opt.max_runs = 1;
  opt.tol = 1e-15;
  try {
    smallest_eigs(cotan_laplacian(icosphere(4)), 40, opt);
    FAIL();
  } catch (const ConvergenceError& e) {
    EXPECT_FALSE(e.best_residuals.empty());
  }
}
