#include "speclab/generators.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "speclab/errors.hpp"

namespace speclab {

TriMesh icosphere(int subdiv, double radius) {
  if (subdiv < 0 || subdiv > 7) throw PreconditionError("icosphere: subdiv must lie in [0, 7]");
  if (!(radius > 0)) throw PreconditionError("icosphere: radius must be positive");
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  TriMesh m;
  m.vertices = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
                {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  m.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
             {11, 10, 2}, {10, 7, 6}, {7, 1, 8}, {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
             {3, 8, 9},  {4, 9, 5},  {2, 4, 11}, {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  for (auto& v : m.vertices) v.normalize();
  for (int level = 0; level < subdiv; ++level) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      m.vertices.push_back((m.vertices[a] + m.vertices[b]).normalized());
      const int id = int(m.vertices.size()) - 1;
      mid.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(4 * m.faces.size());
    for (const auto& f : m.faces) {
      const int a = midpoint(f[0], f[1]), b = midpoint(f[1], f[2]), c = midpoint(f[2], f[0]);
      next.push_back({f[0], a, c});
      next.push_back({f[1], b, a});
      next.push_back({f[2], c, b});
      next.push_back({a, b, c});
    }
    m.faces = std::move(next);
  }
  for (auto& v : m.vertices) v *= radius;
  return m;
}

TriMesh tetrahedron() {
  TriMesh m;
  m.vertices = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  m.faces = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  return m;
}

TriMesh octahedron() {
  TriMesh m;
  m.vertices = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  m.faces = {{4, 0, 2}, {4, 2, 1}, {4, 1, 3}, {4, 3, 0}, {5, 2, 0}, {5, 1, 2}, {5, 3, 1}, {5, 0, 3}};
  return m;
}

namespace {

TriMesh torus_grid(int m, int k, double L1, double L2, double a) {
  if (m < 3 || k < 3) throw PreconditionError("flat_torus: m and k must be >= 3");
  if (!(L1 > 0 && L2 > 0)) throw PreconditionError("flat_torus: lengths must be positive");
  const double dx = L1 / m, dy = L2 / k, dd = std::hypot(dx, dy);
  const double rel_area = 0.5 * dx * dy / (dd * dd);
  if (rel_area < 1e-10) throw MeshError("flat_torus: aspect ratio produces degenerate triangles");
  TriMesh t;
  auto id = [k](int i, int j) { return i * k + j; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) t.vertices.emplace_back(i * dx, j * dy, 0.0);
  auto scale = [&](double x, double y) {
    return 1.0 + a * std::sin(2.0 * std::numbers::pi * x / L1) * std::sin(2.0 * std::numbers::pi * y / L2);
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) {
      const int v00 = id(i, j), v10 = id((i + 1) % m, j), v11 = id((i + 1) % m, (j + 1) % k),
                v01 = id(i, (j + 1) % k);
      const double x = i * dx, y = j * dy;
      // Edge lengths scaled at the edge midpoints in parameter space.
      const double bottom = dx * scale(x + 0.5 * dx, y);
      const double right = dy * scale(x + dx, y + 0.5 * dy);
      const double diag = dd * scale(x + 0.5 * dx, y + 0.5 * dy);
      const double top = dx * scale(x + 0.5 * dx, y + dy);
      const double left = dy * scale(x, y + 0.5 * dy);
      t.faces.push_back({v00, v10, v11});
      t.face_lengths.push_back({bottom, right, diag});
      t.faces.push_back({v00, v11, v01});
      t.face_lengths.push_back({diag, top, left});
    }
  }
  return t;
}

}  // namespace

TriMesh flat_torus(int m, int k, double L1, double L2) { return torus_grid(m, k, L1, L2, 0.0); }

TriMesh conformal_torus(int m, int k, double L1, double L2, double a) {
  if (!(std::abs(a) < 0.5)) throw PreconditionError("conformal_torus: |a| must be < 0.5");
  auto t = torus_grid(m, k, L1, L2, a);
  validate(t);
  return t;
}

RevolutionMesh build_revolution_mesh(const RevolutionProfile& p) {
  const int rings = int(p.s.size());
  const int m = p.segments;
  if (rings < 2 || int(p.rho.size()) != rings) throw PreconditionError("revolution: bad profile");
  if (m < 3) throw PreconditionError("revolution: need at least 3 segments");
  for (int j = 1; j < rings; ++j)
    if (!(p.s[j] > p.s[j - 1])) throw PreconditionError("revolution: s must be increasing");
  if (p.pole_start && p.rho.front() != 0.0) throw PreconditionError("revolution: pole needs rho = 0");
  if (p.pole_end && p.rho.back() != 0.0) throw PreconditionError("revolution: pole needs rho = 0");
  const int first = p.pole_start ? 1 : 0, last = p.pole_end ? rings - 2 : rings - 1;
  for (int j = first; j <= last; ++j)
    if (!(p.rho[j] > 0)) throw PreconditionError("revolution: interior rings need rho > 0");

  RevolutionMesh out;
  TriMesh& mesh = out.mesh;
  const double sn = std::sin(std::numbers::pi / m);
  // Nominal embedding: z advances by the part of ds not consumed by d(rho).
  std::vector<double> z(rings, 0.0);
  for (int j = 1; j < rings; ++j) {
    const double ds = p.s[j] - p.s[j - 1], dr = p.rho[j] - p.rho[j - 1];
    z[j] = z[j - 1] - std::sqrt(std::max(0.0, ds * ds - dr * dr));
  }
  out.ring_vertices.assign(rings, {});
  for (int j = 0; j < rings; ++j) {
    const bool pole = (j == 0 && p.pole_start) || (j == rings - 1 && p.pole_end);
    if (pole) {
      mesh.vertices.emplace_back(0.0, 0.0, z[j]);
      out.ring_vertices[j].assign(m, int(mesh.vertices.size()) - 1);
      continue;
    }
    for (int q = 0; q < m; ++q) {
      const double phi = 2.0 * std::numbers::pi * q / m;
      mesh.vertices.emplace_back(p.rho[j] * std::cos(phi), p.rho[j] * std::sin(phi), z[j]);
      out.ring_vertices[j].push_back(int(mesh.vertices.size()) - 1);
    }
  }
  const auto& R = out.ring_vertices;
  for (int j = 0; j + 1 < rings; ++j) {
    const double ds = p.s[j + 1] - p.s[j];
    const double w0 = 2.0 * p.rho[j] * sn, w1 = 2.0 * p.rho[j + 1] * sn;
    for (int q = 0; q < m; ++q) {
      const int qn = (q + 1) % m;
      if (j == 0 && p.pole_start) {
        if (!(w1 < 2.0 * ds)) throw MeshError("revolution: pole fan too flat at ring 1");
        mesh.faces.push_back({R[0][0], R[1][qn], R[1][q]});
        mesh.face_lengths.push_back({ds, w1, ds});
        continue;
      }
      if (j + 1 == rings - 1 && p.pole_end) {
        if (!(w0 < 2.0 * ds)) throw MeshError("revolution: pole fan too flat at last ring");
        mesh.faces.push_back({R[j][q], R[j][qn], R[j + 1][0]});
        mesh.face_lengths.push_back({w0, ds, ds});
        continue;
      }
      double bottom = w0, top = w1, leg, diag;
      if (std::abs(w1 - w0) / 2.0 <= 0.9 * ds) {
        const double h = std::sqrt(ds * ds - 0.25 * (w1 - w0) * (w1 - w0));
        leg = ds;
        diag = std::hypot(0.5 * (w0 + w1), h);
      } else {
        bottom = top = 0.5 * (w0 + w1);
        leg = ds;
        diag = std::hypot(bottom, ds);
      }
      const int a = R[j][q], b = R[j][qn], c = R[j + 1][qn], d = R[j + 1][q];
      mesh.faces.push_back({a, b, c});
      mesh.face_lengths.push_back({bottom, leg, diag});
      mesh.faces.push_back({a, c, d});
      mesh.face_lengths.push_back({diag, top, leg});
    }
  }
  return out;
}

}  // namespace speclab
