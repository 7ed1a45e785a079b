#include "speclab/cheeger.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>

#include "speclab/errors.hpp"

namespace speclab {

CheegerResult brute_cheeger(const TriMesh& mesh, int max_vertices) {
  const int n = mesh.vertex_count();
  if (n > max_vertices || n > 24) throw PreconditionError("brute_cheeger: mesh too large for enumeration");
  if (n < 2) throw PreconditionError("brute_cheeger: need at least two vertices");
  struct EdgeData {
    double length = 0.0;
    int faces = 0;
    double weight = 0.0;
  };
  std::map<std::pair<int, int>, EdgeData> edges;
  std::vector<double> area(n, 0.0);
  for (int f = 0; f < mesh.face_count(); ++f) {
    const auto& t = mesh.faces[f];
    const auto l = mesh.lengths(f);
    const double a = triangle_area(l[0], l[1], l[2]);
    for (int k = 0; k < 3; ++k) {
      auto& e = edges[std::minmax(t[k], t[(k + 1) % 3])];
      e.length += l[k];
      e.faces += 1;
      e.weight += a / (3.0 * l[k] * l[k]);
      area[t[k]] += a / 3.0;
    }
  }
  std::vector<int> ea, eb;
  std::vector<double> el, ew;
  CheegerResult r;
  r.kappa = std::numeric_limits<double>::infinity();
  std::vector<double> degree(n, 0.0);
  for (const auto& [key, e] : edges) {
    ea.push_back(key.first);
    eb.push_back(key.second);
    el.push_back(e.length / e.faces);
    ew.push_back(e.weight);
    r.kappa = std::min(r.kappa, e.weight / el.back());
    degree[key.first] += e.weight;
    degree[key.second] += e.weight;
  }
  for (int v = 0; v < n; ++v) r.d_max = std::max(r.d_max, degree[v] / area[v]);
  r.discrete_constant = 2.0 * r.d_max / (r.kappa * r.kappa);
  double total = 0.0;
  for (double a : area) total += a;

  r.h = r.h_weighted = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  const std::uint32_t limit = 1u << (n - 1);  // subsets without the last vertex
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    double side = 0.0;
    for (int v = 0; v < n - 1; ++v)
      if (mask >> v & 1u) side += area[v];
    const double vol = std::min(side, total - side);
    double cut = 0.0, wcut = 0.0;
    for (size_t i = 0; i < ea.size(); ++i) {
      const bool ia = ea[i] < n - 1 && (mask >> ea[i] & 1u);
      const bool ib = eb[i] < n - 1 && (mask >> eb[i] & 1u);
      if (ia != ib) {
        cut += el[i];
        wcut += ew[i];
      }
    }
    if (cut / vol < r.h) {
      r.h = cut / vol;
      best_mask = mask;
    }
    r.h_weighted = std::min(r.h_weighted, wcut / vol);
  }
  for (int v = 0; v < n - 1; ++v)
    if (best_mask >> v & 1u) r.subset.push_back(v);
  return r;
}

}  // namespace speclab
