#include "speclab/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/SparseCholesky>

#include "speclab/errors.hpp"
#include "speclab/jacobi.hpp"

namespace speclab {

double spectral_shift(const OperatorPair& ops) { return 1e-2 * 4.0 * std::numbers::pi / ops.mass.sum(); }

namespace {

struct Problem {
  const OperatorPair& ops;
  Eigen::VectorXd root_mass, inv_root_mass;
  Eigen::SimplicialLDLT<SparseMatrix> solver;
  double tau;
  double noise;  // rounding floor of a residual, from a Gershgorin bound on the operator

  explicit Problem(const OperatorPair& o) : ops(o) {
    if ((o.mass.array() <= 0).any()) throw PreconditionError("eigensolver: mass must be positive");
    root_mass = o.mass.cwiseSqrt();
    inv_root_mass = root_mass.cwiseInverse();
    tau = spectral_shift(o);
    Eigen::VectorXd row = Eigen::VectorXd::Zero(o.stiffness.rows());
    for (int c = 0; c < o.stiffness.outerSize(); ++c)
      for (SparseMatrix::InnerIterator it(o.stiffness, c); it; ++it)
        row(it.row()) += std::abs(it.value()) * inv_root_mass(it.row()) * inv_root_mass(it.col());
    noise = 64.0 * std::numeric_limits<double>::epsilon() * row.maxCoeff();
    SparseMatrix k = o.stiffness;
    for (int i = 0; i < k.rows(); ++i) k.coeffRef(i, i) += tau * o.mass(i);
    solver.compute(k);
    if (solver.info() != Eigen::Success) throw ConvergenceError("eigensolver: factorization failed");
  }

  Eigen::VectorXd inverse(const Eigen::VectorXd& y) const {
    Eigen::VectorXd b = root_mass.cwiseProduct(y);
    return root_mass.cwiseProduct(solver.solve(b));
  }
  Eigen::VectorXd apply(const Eigen::VectorXd& y) const {
    Eigen::VectorXd v = inv_root_mass.cwiseProduct(y);
    return inv_root_mass.cwiseProduct(ops.stiffness * v);
  }
  double residual(const Eigen::VectorXd& y, double lambda) const { return (apply(y) - lambda * y).norm(); }
  double scale(double lambda) const { return std::max(std::abs(lambda), tau); }
  bool accept(double r, double lambda, double tol) const { return r <= tol * scale(lambda) + noise; }
};

// Two passes of classical Gram-Schmidt against the columns of basis.
void orthogonalize(Eigen::VectorXd& w, const Eigen::MatrixXd& basis, int cols) {
  if (cols == 0) return;
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::VectorXd c = basis.leftCols(cols).transpose() * w;
    w -= basis.leftCols(cols) * c;
  }
}

struct Pair {
  double lambda;
  Eigen::VectorXd y;
  double residual;
};

// One Lanczos run in the complement of the locked vectors. Returns the
// converged Ritz pairs taken from the bottom of the spectrum, in order, stopping
// at the first unconverged one.
std::vector<Pair> lanczos_run(const Problem& pb, const Eigen::MatrixXd& locked, int nlocked, int steps,
                              std::mt19937_64& rng, double tol, double& best_unconverged) {
  const int n = int(pb.ops.mass.size());
  std::normal_distribution<double> g;
  Eigen::VectorXd q(n);
  for (int i = 0; i < n; ++i) q(i) = g(rng);
  orthogonalize(q, locked, nlocked);
  q.normalize();
  Eigen::MatrixXd Q(n, steps + 1);
  Q.col(0) = q;
  std::vector<double> alpha, beta;
  int m = 0;
  for (int j = 0; j < steps; ++j) {
    Eigen::VectorXd w = pb.inverse(Q.col(j));
    orthogonalize(w, locked, nlocked);
    const double a = Q.col(j).dot(w);
    w -= a * Q.col(j);
    if (j > 0) w -= beta.back() * Q.col(j - 1);
    orthogonalize(w, Q, j + 1);
    orthogonalize(w, locked, nlocked);
    alpha.push_back(a);
    m = j + 1;
    const double b = w.norm();
    if (j + 1 == steps || b <= 1e-14 * std::abs(a)) break;
    beta.push_back(b);
    Q.col(j + 1) = w / b;
  }
  Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
  Eigen::VectorXd sub(std::max(m - 1, 0));
  for (int i = 0; i + 1 < m; ++i) sub(i) = beta[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  std::vector<Pair> out;
  for (int k = m - 1; k >= 0; --k) {
    if (!(es.eigenvalues()(k) > 0)) break;
    Eigen::VectorXd y = Q.leftCols(m) * es.eigenvectors().col(k);
    orthogonalize(y, locked, nlocked);
    y.normalize();
    const double lambda = y.dot(pb.apply(y));
    const double r = pb.residual(y, lambda);
    if (!pb.accept(r, lambda, tol)) {
      best_unconverged = std::min(best_unconverged, r / pb.scale(lambda));
      break;
    }
    out.push_back({lambda, y, r});
  }
  return out;
}

SpectrumResult finish(const Problem& pb, const Eigen::MatrixXd& ys, const Eigen::VectorXd& lambdas) {
  SpectrumResult r;
  const int k = int(lambdas.size());
  r.values = lambdas;
  r.vectors.resize(ys.rows(), k);
  r.residuals.resize(k);
  for (int i = 0; i < k; ++i) {
    r.vectors.col(i) = pb.inv_root_mass.cwiseProduct(ys.col(i));
    r.residuals(i) =
        (pb.ops.stiffness * r.vectors.col(i) - lambdas(i) * pb.ops.mass.cwiseProduct(r.vectors.col(i))).norm();
  }
  return r;
}

}  // namespace

SpectrumResult smallest_eigs(const OperatorPair& ops, int count, const EigOptions& opt) {
  constexpr int kMaxSteps = 1000;  // keeps the Krylov basis within memory on large meshes
  const int n = int(ops.mass.size());
  if (count < 1 || 4 * count > n) throw PreconditionError("smallest_eigs: need 1 <= count <= dimension/4");
  if (!(opt.tol > 0)) throw PreconditionError("smallest_eigs: tolerance must be positive");
  const Problem pb(ops);
  std::mt19937_64 rng(opt.seed);
  Eigen::MatrixXd locked(n, 0);
  std::vector<double> locked_lambda;
  int nlocked = 0;
  int steps = std::min(n - 1, std::max(40, 2 * count + 20));
  double best = std::numeric_limits<double>::infinity();
  bool done = false;
  for (int run = 0; run < opt.max_runs && !done; ++run) {
    const int room = n - nlocked - 1;
    if (room < 1) break;
    auto found = lanczos_run(pb, locked, nlocked, std::min(steps, room), rng, opt.tol, best);
    if (found.empty()) {
      steps = std::min({2 * steps, n - 1, kMaxSteps});
      continue;
    }
    if (nlocked >= count) {
      std::vector<double> sorted = locked_lambda;
      std::sort(sorted.begin(), sorted.end());
      const double cut = sorted[count - 1];
      if (found.front().lambda >= cut - opt.tol * pb.scale(cut)) {
        done = true;
        break;
      }
    }
    for (auto& p : found) {
      orthogonalize(p.y, locked, nlocked);
      const double norm = p.y.norm();
      if (norm < 0.5) continue;  // already represented
      locked.conservativeResize(n, nlocked + 1);
      locked.col(nlocked++) = p.y / norm;
      locked_lambda.push_back(p.lambda);
    }
  }
  if (!done) {
    throw ConvergenceError("smallest_eigs: no convergence (best relative residual " + std::to_string(best) + ")",
                           {best});
  }
  // Rayleigh-Ritz on everything locked.
  Eigen::MatrixXd cy(n, nlocked);
  for (int i = 0; i < nlocked; ++i) cy.col(i) = pb.apply(locked.col(i));
  Eigen::MatrixXd h = locked.transpose() * cy;
  h = 0.5 * (h + h.transpose());
  const auto jr = jacobi_eigen(h, true);
  Eigen::MatrixXd ys = locked * jr.vectors.leftCols(count);
  Eigen::VectorXd lambdas = jr.values.head(count);
  std::vector<double> bad;
  for (int i = 0; i < count; ++i) {
    const double r = pb.residual(ys.col(i), lambdas(i));
    if (!pb.accept(r, lambdas(i), 10.0 * opt.tol)) bad.push_back(r);
  }
  if (!bad.empty()) throw ConvergenceError("smallest_eigs: Rayleigh-Ritz refinement lost accuracy", bad);
  return finish(pb, ys, lambdas);
}

SpectrumResult dense_eigs_oracle(const OperatorPair& ops) {
  const int n = int(ops.mass.size());
  if (n > 400) throw PreconditionError("dense_eigs_oracle: dimension must be <= 400");
  if ((ops.mass.array() <= 0).any()) throw PreconditionError("dense_eigs_oracle: mass must be positive");
  const Eigen::VectorXd d = ops.mass.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd c = d.asDiagonal() * Eigen::MatrixXd(ops.stiffness) * d.asDiagonal();
  c = 0.5 * (c + c.transpose());
  const auto jr = jacobi_eigen(c, true);
  SpectrumResult r;
  r.values = jr.values;
  r.vectors = d.asDiagonal() * jr.vectors;
  r.residuals.resize(n);
  for (int i = 0; i < n; ++i)
    r.residuals(i) = (ops.stiffness * r.vectors.col(i) - r.values(i) * ops.mass.cwiseProduct(r.vectors.col(i))).norm();
  return r;
}

}  // namespace speclab
