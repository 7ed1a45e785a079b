#include "speclab/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "speclab/errors.hpp"
#include "speclab/jacobi.hpp"

namespace speclab {

ImagePoint vertex_image(const TriMesh& target, const std::vector<std::vector<int>>& vf, int v) {
  if (v < 0 || v >= int(vf.size()) || vf[v].empty()) throw PreconditionError("vertex_image: bad vertex");
  ImagePoint p;
  p.face = vf[v].front();
  const auto& t = target.faces[p.face];
  for (int k = 0; k < 3; ++k) p.bary[k] = t[k] == v ? 1.0 : 0.0;
  return p;
}

SimplicialMap identity_map(const TriMesh& mesh) {
  const auto vf = vertex_faces(mesh);
  SimplicialMap m;
  for (int v = 0; v < mesh.vertex_count(); ++v) m.images.push_back(vertex_image(mesh, vf, v));
  return m;
}

void validate_map(const SimplicialMap& map, const TriMesh& source, const TriMesh& target) {
  if (int(map.images.size()) != source.vertex_count()) throw PreconditionError("map: one image per source vertex");
  for (const auto& p : map.images) {
    if (p.face < 0 || p.face >= target.face_count()) throw PreconditionError("map: image face out of range");
    double s = 0.0;
    for (double b : p.bary) {
      if (b < -1e-12) throw PreconditionError("map: negative barycentric coordinate");
      s += b;
    }
    if (std::abs(s - 1.0) > 1e-12) throw PreconditionError("map: barycentric coordinates must sum to 1");
  }
}

SparseMatrix pullback_matrix(const SimplicialMap& map, const TriMesh& target) {
  std::vector<Eigen::Triplet<double>> trip;
  for (int v = 0; v < int(map.images.size()); ++v) {
    const auto& p = map.images[v];
    for (int k = 0; k < 3; ++k)
      if (p.bary[k] != 0.0) trip.emplace_back(v, target.faces[p.face][k], p.bary[k]);
  }
  SparseMatrix P(int(map.images.size()), target.vertex_count());
  P.setFromTriplets(trip.begin(), trip.end());
  return P;
}

Eigen::VectorXd pullback(const Eigen::VectorXd& f, const SimplicialMap& map, const TriMesh& target) {
  if (f.size() != target.vertex_count()) throw PreconditionError("pullback: vector size mismatch");
  return pullback_matrix(map, target) * f;
}

namespace {

double min_eigenvalue(const Eigen::MatrixXd& a) { return jacobi_eigen(a, false).values(0); }
double max_eigenvalue(const Eigen::MatrixXd& a) {
  const auto v = jacobi_eigen(a, false).values;
  return v(v.size() - 1);
}

}  // namespace

MinimaxReport minimax_check(const TriMesh& y, const TriMesh& x, const SimplicialMap& map, int i_max,
                            const SpectrumResult& spec_y, const SpectrumResult& spec_x) {
  validate_map(map, y, x);
  const int k = i_max + 1;
  if (i_max < 1 || spec_x.values.size() < k || spec_y.values.size() < k)
    throw PreconditionError("minimax_check: spectra must reach index i_max >= 1");
  const auto ops_y = cotan_laplacian(y);
  const auto ops_x = cotan_laplacian(x);
  const double vol_y = ops_y.mass.sum(), vol_x = ops_x.mass.sum();
  Eigen::MatrixXd basis = spec_x.vectors.leftCols(k);
  basis.col(0).setConstant(1.0 / std::sqrt(vol_x));
  const Eigen::MatrixXd w = pullback_matrix(map, x) * basis;
  Eigen::MatrixXd gram = w.transpose() * ops_y.mass.asDiagonal() * w;
  gram = 0.5 * (gram + gram.transpose());
  Eigen::MatrixXd energy = w.transpose() * (ops_y.stiffness * w);
  energy = 0.5 * (energy + energy.transpose());

  MinimaxReport r;
  r.i_max = i_max;
  r.delta = 1.0 - min_eigenvalue(gram * (vol_x / vol_y));
  Eigen::VectorXd inv_root(k - 1);
  for (int i = 1; i < k; ++i) {
    if (!(spec_x.values(i) > 0)) throw PreconditionError("minimax_check: target eigenvalue must be positive");
    inv_root(i - 1) = 1.0 / std::sqrt(spec_x.values(i));
  }
  const Eigen::MatrixXd inflation =
      inv_root.asDiagonal() * energy.bottomRightCorner(k - 1, k - 1) * inv_root.asDiagonal() * (vol_x / vol_y);
  r.epsilon = max_eigenvalue(inflation) - 1.0;
  r.feasible = r.delta < 1.0;
  // Rayleigh-Ritz values of Y on the pulled-back space.
  Eigen::LLT<Eigen::MatrixXd> chol(gram);
  if (chol.info() == Eigen::Success) {
    const Eigen::MatrixXd linv = chol.matrixL().solve(Eigen::MatrixXd::Identity(k, k));
    const auto ritz = jacobi_eigen(linv * energy * linv.transpose(), false).values;
    r.ritz_y.assign(ritz.data(), ritz.data() + k);
  }
  const double factor = (1.0 + r.epsilon) / (1.0 - r.delta);
  for (int i = 0; i < k; ++i) {
    r.lambda_x.push_back(spec_x.values(i));
    r.lambda_y.push_back(spec_y.values(i));
    r.bound.push_back(factor * spec_x.values(i));
  }
  if (r.feasible) {
    const double floor = 1e-10 * spec_x.values(1);
    for (int i = 0; i < k; ++i)
      if (r.lambda_y[i] > r.bound[i] * (1.0 + 1e-8) + floor) ++r.violations;
  }
  return r;
}

MinimaxReport minimax_check(const TriMesh& y, const TriMesh& x, const SimplicialMap& map, int i_max,
                            const EigOptions& opt) {
  const auto sy = smallest_eigs(cotan_laplacian(y), i_max + 1, opt);
  const auto sx = smallest_eigs(cotan_laplacian(x), i_max + 1, opt);
  return minimax_check(y, x, map, i_max, sy, sx);
}

namespace {

// Squared distance between two points of one face given barycentric difference d.
double face_distance2(const std::array<double, 3>& l, const std::array<double, 3>& d) {
  return std::max(0.0, -(d[0] * d[1] * l[0] * l[0] + d[1] * d[2] * l[1] * l[1] + d[2] * d[0] * l[2] * l[2]));
}

// Barycentric coordinates of an image point re-expressed in face f, if its support lies there.
bool express_in(const TriMesh& x, const ImagePoint& p, int f, std::array<double, 3>& out) {
  out = {0.0, 0.0, 0.0};
  const auto& src = x.faces[p.face];
  const auto& dst = x.faces[f];
  for (int k = 0; k < 3; ++k) {
    if (p.bary[k] == 0.0) continue;
    int j = 0;
    while (j < 3 && dst[j] != src[k]) ++j;
    if (j == 3) return false;
    out[j] += p.bary[k];
  }
  return true;
}

Eigen::Vector3d embed(const TriMesh& x, const ImagePoint& p) {
  const auto& t = x.faces[p.face];
  return p.bary[0] * x.vertices[t[0]] + p.bary[1] * x.vertices[t[1]] + p.bary[2] * x.vertices[t[2]];
}

}  // namespace

MapStatistics map_statistics(const SimplicialMap& map, const TriMesh& y, const TriMesh& x, double eta) {
  validate_map(map, y, x);
  if (!(eta > 0 && eta < 1)) throw PreconditionError("map_statistics: eta must lie in (0, 1)");
  const auto vf = vertex_faces(x);
  MapStatistics st;
  const double low = 1.0 - std::sqrt(eta);
  double low_area = 0.0, area_y = 0.0;
  st.jacobian_bounded = st.energy_bounded = true;
  for (int f = 0; f < y.face_count(); ++f) {
    const auto l = y.lengths(f);
    const double area = triangle_area(l[0], l[1], l[2]);
    if (!(area > 0)) throw MeshError("map_statistics: degenerate source face " + std::to_string(f));
    // Source frame: corner 0 at origin, corner 1 on the x axis.
    const double x2 = (l[0] * l[0] + l[2] * l[2] - l[1] * l[1]) / (2.0 * l[0]);
    const double y2 = std::sqrt(std::max(0.0, l[2] * l[2] - x2 * x2));
    Eigen::Matrix2d es;
    es << l[0], x2, 0.0, y2;
    // Image edge lengths, measured inside one target face when possible.
    const auto& t = y.faces[f];
    const ImagePoint* img[3] = {&map.images[t[0]], &map.images[t[1]], &map.images[t[2]]};
    double d01 = 0, d12 = 0, d20 = 0;
    bool found = false;
    std::vector<int> candidates;
    for (int k = 0; k < 3; ++k)
      for (int c = 0; c < 3; ++c)
        if (img[k]->bary[c] != 0.0) {
          const int v = x.faces[img[k]->face][c];
          candidates.insert(candidates.end(), vf[v].begin(), vf[v].end());
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (int cf : candidates) {
      std::array<double, 3> b0, b1, b2;
      if (!express_in(x, *img[0], cf, b0) || !express_in(x, *img[1], cf, b1) || !express_in(x, *img[2], cf, b2))
        continue;
      const auto lx = x.lengths(cf);
      auto diff = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
      };
      d01 = face_distance2(lx, diff(b1, b0));
      d12 = face_distance2(lx, diff(b2, b1));
      d20 = face_distance2(lx, diff(b0, b2));
      found = true;
      break;
    }
    if (!found) {
      ++st.chord_fallback_faces;
      const auto p0 = embed(x, *img[0]), p1 = embed(x, *img[1]), p2 = embed(x, *img[2]);
      d01 = (p1 - p0).squaredNorm();
      d12 = (p2 - p1).squaredNorm();
      d20 = (p0 - p2).squaredNorm();
    }
    Eigen::Matrix2d g;
    g << d01, 0.5 * (d01 + d20 - d12), 0.5 * (d01 + d20 - d12), d20;
    const Eigen::Matrix2d ei = es.inverse();
    const Eigen::Matrix2d a = ei.transpose() * g * ei;
    const double e = a.trace();
    const double jac = std::sqrt(std::max(0.0, a.determinant()));
    st.energy.push_back(e);
    st.jacobian.push_back(jac);
    st.max_energy = std::max(st.max_energy, e);
    st.max_jacobian = std::max(st.max_jacobian, jac);
    if (jac > 1.0 + eta) st.jacobian_bounded = false;
    if (e > 2.0 * (1.0 + eta)) st.energy_bounded = false;
    if (jac <= low) low_area += area;
    area_y += area;
  }
  st.low_jacobian_fraction = low_area / area_y;
  st.fraction_bound = 2.0 * std::sqrt(eta);
  st.volume_condition = area_y * (1.0 - eta) <= total_area(x);
  st.preconditions_hold = st.jacobian_bounded && st.energy_bounded && st.volume_condition;
  return st;
}

VertexPairs sample_pairs(int n, std::uint64_t seed) {
  VertexPairs pairs;
  if (n <= 2000) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int s = 0; s < 200; ++s) {
    const int a = pick(rng);
    for (int t = 0; t < 500; ++t) pairs.emplace_back(a, pick(rng));
  }
  return pairs;
}

double gh_distortion(const SimplicialMap& map, const TriMesh& y, const TriMesh& x, const VertexPairs& pairs) {
  validate_map(map, y, x);
  const auto gy = edge_graph(y);
  const auto gx = edge_graph(x);
  auto corner_offsets = [&](const ImagePoint& p) {
    std::vector<std::pair<int, double>> out;
    const auto l = x.lengths(p.face);
    for (int c = 0; c < 3; ++c) {
      std::array<double, 3> d = p.bary;
      d[c] -= 1.0;
      out.emplace_back(x.faces[p.face][c], std::sqrt(face_distance2(l, d)));
    }
    return out;
  };
  std::map<int, std::vector<int>> by_source;
  for (const auto& [a, b] : pairs) by_source[a].push_back(b);
  double worst = 0.0;
  for (const auto& [s, targets] : by_source) {
    const auto dy = dijkstra(gy, {{s, 0.0}});
    const auto& ps = map.images[s];
    const auto dx = dijkstra(gx, corner_offsets(ps));
    for (int t : targets) {
      const auto& pt = map.images[t];
      double best = std::numeric_limits<double>::infinity();
      for (const auto& [v, off] : corner_offsets(pt)) best = std::min(best, dx[v] + off);
      std::array<double, 3> bs;
      if (express_in(x, ps, pt.face, bs)) {
        const std::array<double, 3> d{pt.bary[0] - bs[0], pt.bary[1] - bs[1], pt.bary[2] - bs[2]};
        best = std::min(best, std::sqrt(face_distance2(x.lengths(pt.face), d)));
      }
      worst = std::max(worst, std::abs(dy[t] - best));
    }
  }
  return worst;
}

}  // namespace speclab
