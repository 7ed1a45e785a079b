#include "speclab/operators.hpp"

#include <cmath>

#include "speclab/errors.hpp"

namespace speclab {

OperatorPair cotan_laplacian(const TriMesh& mesh) {
  const int n = mesh.vertex_count();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(12 * mesh.face_count());
  OperatorPair ops;
  ops.mass = Eigen::VectorXd::Zero(n);
  for (int f = 0; f < mesh.face_count(); ++f) {
    const auto& t = mesh.faces[f];
    const auto l = mesh.lengths(f);
    const double area = triangle_area(l[0], l[1], l[2]);
    if (!(area > 0) || !std::isfinite(area))
      throw MeshError("cotan_laplacian: degenerate face " + std::to_string(f));
    for (int k = 0; k < 3; ++k) {
      // Edge opposite corner k runs from corner k+1 to corner k+2 and has length l[(k+1)%3].
      const double opp = l[(k + 1) % 3], a = l[k], b = l[(k + 2) % 3];
      const double w = 0.5 * (a * a + b * b - opp * opp) / (4.0 * area);
      if (!std::isfinite(w)) throw MeshError("cotan_laplacian: non-finite weight in face " + std::to_string(f));
      const int i = t[(k + 1) % 3], j = t[(k + 2) % 3];
      trip.emplace_back(i, j, -w);
      trip.emplace_back(j, i, -w);
      trip.emplace_back(i, i, w);
      trip.emplace_back(j, j, w);
      ops.mass(t[k]) += area / 3.0;
    }
  }
  ops.stiffness.resize(n, n);
  ops.stiffness.setFromTriplets(trip.begin(), trip.end());
  ops.stiffness.makeCompressed();
  return ops;
}

OperatorPair restrict_to(const OperatorPair& ops, const std::vector<int>& keep) {
  const int n = int(ops.mass.size());
  std::vector<int> index(n, -1);
  for (int i = 0; i < int(keep.size()); ++i) index[keep[i]] = i;
  std::vector<Eigen::Triplet<double>> trip;
  for (int col = 0; col < ops.stiffness.outerSize(); ++col)
    for (SparseMatrix::InnerIterator it(ops.stiffness, col); it; ++it)
      if (index[it.row()] >= 0 && index[it.col()] >= 0) trip.emplace_back(index[it.row()], index[it.col()], it.value());
  OperatorPair out;
  out.stiffness.resize(int(keep.size()), int(keep.size()));
  out.stiffness.setFromTriplets(trip.begin(), trip.end());
  out.stiffness.makeCompressed();
  out.mass.resize(int(keep.size()));
  for (int i = 0; i < int(keep.size()); ++i) out.mass(i) = ops.mass(keep[i]);
  return out;
}

double rayleigh(const OperatorPair& ops, const Eigen::VectorXd& f) {
  const double den = f.dot(ops.mass.cwiseProduct(f));
  if (!(den > 0)) throw PreconditionError("rayleigh: zero vector");
  return f.dot(ops.stiffness * f) / den;
}

double rayleigh(const TriMesh& mesh, const Eigen::VectorXd& f) { return rayleigh(cotan_laplacian(mesh), f); }

}  // namespace speclab
