#include "speclab/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "speclab/errors.hpp"

namespace speclab {

std::array<double, 3> TriMesh::lengths(int f) const {
  if (has_metric()) return face_lengths[f];
  const auto& t = faces[f];
  return {(vertices[t[1]] - vertices[t[0]]).norm(), (vertices[t[2]] - vertices[t[1]]).norm(),
          (vertices[t[0]] - vertices[t[2]]).norm()};
}

double triangle_area(double a, double b, double c) {
  if (a < b) std::swap(a, b);
  if (a < c) std::swap(a, c);
  if (b < c) std::swap(b, c);
  const double q = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  return q > 0 ? 0.25 * std::sqrt(q) : 0.0;
}

double face_area(const TriMesh& mesh, int f) {
  const auto l = mesh.lengths(f);
  return triangle_area(l[0], l[1], l[2]);
}

double total_area(const TriMesh& mesh) {
  double s = 0.0;
  for (int f = 0; f < mesh.face_count(); ++f) s += face_area(mesh, f);
  return s;
}

std::vector<std::vector<int>> vertex_faces(const TriMesh& mesh) {
  std::vector<std::vector<int>> vf(mesh.vertex_count());
  for (int f = 0; f < mesh.face_count(); ++f)
    for (int v : mesh.faces[f]) vf[v].push_back(f);
  return vf;
}

void validate(const TriMesh& mesh) {
  const int nv = mesh.vertex_count();
  if (nv == 0 || mesh.face_count() == 0) throw MeshError("mesh is empty");
  if (mesh.has_metric() && int(mesh.face_lengths.size()) != mesh.face_count())
    throw MeshError("face_lengths size does not match face count");
  std::map<std::pair<int, int>, int> half_edges;
  std::set<std::array<int, 3>> seen;
  for (int f = 0; f < mesh.face_count(); ++f) {
    const auto& t = mesh.faces[f];
    for (int v : t)
      if (v < 0 || v >= nv) throw MeshError("face " + std::to_string(f) + " has an out-of-range vertex");
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw MeshError("face " + std::to_string(f) + " repeats a vertex");
    auto key = t;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) throw MeshError("duplicate face " + std::to_string(f));
    for (int k = 0; k < 3; ++k) {
      if (++half_edges[{t[k], t[(k + 1) % 3]}] > 1)
        throw MeshError("inconsistent orientation or non-manifold edge at face " + std::to_string(f));
    }
    const auto l = mesh.lengths(f);
    for (double x : l)
      if (!(x > 0) || !std::isfinite(x)) throw MeshError("face " + std::to_string(f) + " has a bad edge length");
    if (!(l[0] < l[1] + l[2] && l[1] < l[0] + l[2] && l[2] < l[0] + l[1]))
      throw MeshError("face " + std::to_string(f) + " violates the triangle inequality");
  }
  // Each vertex star must be a single fan: link edges form one path or cycle.
  const auto vf = vertex_faces(mesh);
  for (int v = 0; v < nv; ++v) {
    if (vf[v].empty()) throw MeshError("vertex " + std::to_string(v) + " is unreferenced");
    std::map<int, int> next, indeg;
    for (int f : vf[v]) {
      const auto& t = mesh.faces[f];
      int k = 0;
      while (t[k] != v) ++k;
      const int a = t[(k + 1) % 3], b = t[(k + 2) % 3];
      next[a] = b;
      indeg[b]++;
      indeg.try_emplace(a, 0);
    }
    int start = next.begin()->first;
    for (const auto& [w, d] : indeg)
      if (d == 0) start = w;
    int count = 0, cur = start;
    std::set<int> visited;
    while (next.count(cur) && visited.insert(cur).second) {
      cur = next[cur];
      ++count;
    }
    if (count != int(vf[v].size())) throw MeshError("vertex " + std::to_string(v) + " is non-manifold");
  }
  // Connectivity.
  const auto g = edge_graph(mesh);
  std::vector<char> mark(nv, 0);
  std::vector<int> stack{0};
  mark[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& e : g[v])
      if (!mark[e.to]) {
        mark[e.to] = 1;
        ++reached;
        stack.push_back(e.to);
      }
  }
  if (reached != nv) throw MeshError("mesh is not connected");
}

std::vector<std::vector<WeightedEdge>> edge_graph(const TriMesh& mesh) {
  std::map<std::pair<int, int>, std::pair<double, int>> acc;
  for (int f = 0; f < mesh.face_count(); ++f) {
    const auto& t = mesh.faces[f];
    const auto l = mesh.lengths(f);
    for (int k = 0; k < 3; ++k) {
      const int a = std::min(t[k], t[(k + 1) % 3]), b = std::max(t[k], t[(k + 1) % 3]);
      auto& slot = acc[{a, b}];
      slot.first += l[k];
      slot.second += 1;
    }
  }
  std::vector<std::vector<WeightedEdge>> g(mesh.vertex_count());
  for (const auto& [e, s] : acc) {
    const double len = s.first / s.second;
    g[e.first].push_back({e.second, len});
    g[e.second].push_back({e.first, len});
  }
  return g;
}

std::vector<std::pair<int, int>> unique_edges(const TriMesh& mesh) {
  std::set<std::pair<int, int>> s;
  for (const auto& t : mesh.faces)
    for (int k = 0; k < 3; ++k) s.insert({std::min(t[k], t[(k + 1) % 3]), std::max(t[k], t[(k + 1) % 3])});
  return {s.begin(), s.end()};
}

std::vector<int> boundary_vertices(const TriMesh& mesh) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& t : mesh.faces)
    for (int k = 0; k < 3; ++k) count[{std::min(t[k], t[(k + 1) % 3]), std::max(t[k], t[(k + 1) % 3])}]++;
  std::set<int> b;
  for (const auto& [e, c] : count)
    if (c == 1) {
      b.insert(e.first);
      b.insert(e.second);
    }
  return {b.begin(), b.end()};
}

std::vector<double> dijkstra(const std::vector<std::vector<WeightedEdge>>& graph,
                             const std::vector<std::pair<int, double>>& seeds) {
  std::vector<double> dist(graph.size(), std::numeric_limits<double>::infinity());
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  for (const auto& [v, d] : seeds)
    if (d < dist[v]) {
      dist[v] = d;
      pq.push({d, v});
    }
  while (!pq.empty()) {
    const auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (const auto& e : graph[v]) {
      const double nd = d + e.length;
      if (nd < dist[e.to]) {
        dist[e.to] = nd;
        pq.push({nd, e.to});
      }
    }
  }
  return dist;
}

double graph_diameter(const TriMesh& mesh) {
  const auto g = edge_graph(mesh);
  const int n = mesh.vertex_count();
  double diam = 0.0;
  if (n <= 2000) {
    for (int s = 0; s < n; ++s) {
      const auto d = dijkstra(g, {{s, 0.0}});
      diam = std::max(diam, *std::max_element(d.begin(), d.end()));
    }
    return diam;
  }
  int s = 0;
  for (int sweep = 0; sweep < 8; ++sweep) {
    const auto d = dijkstra(g, {{s, 0.0}});
    const auto it = std::max_element(d.begin(), d.end());
    diam = std::max(diam, *it);
    s = int(it - d.begin());
  }
  return diam;
}

}  // namespace speclab
