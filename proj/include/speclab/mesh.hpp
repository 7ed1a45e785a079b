#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace speclab {

// Triangle mesh. When face_lengths is non-empty it overrides the embedding:
// face_lengths[f][k] is the length of the edge from corner k to corner k+1
// as seen by face f, so non-embeddable metrics are representable.
struct TriMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<std::array<double, 3>> face_lengths;

  int vertex_count() const { return int(vertices.size()); }
  int face_count() const { return int(faces.size()); }
  bool has_metric() const { return !face_lengths.empty(); }
  std::array<double, 3> lengths(int f) const;
};

// Throws MeshError unless the mesh is a connected, consistently oriented
// manifold (boundary allowed) with strict triangle inequalities.
void validate(const TriMesh& mesh);

double triangle_area(double a, double b, double c);  // Heron, Kahan ordering
double face_area(const TriMesh& mesh, int f);
double total_area(const TriMesh& mesh);

struct WeightedEdge {
  int to;
  double length;
};
// Vertex adjacency with edge length = mean over the faces that carry the edge.
std::vector<std::vector<WeightedEdge>> edge_graph(const TriMesh& mesh);
std::vector<std::pair<int, int>> unique_edges(const TriMesh& mesh);
std::vector<int> boundary_vertices(const TriMesh& mesh);
std::vector<std::vector<int>> vertex_faces(const TriMesh& mesh);

// Single-source Dijkstra; seeds allow starting from several vertices at given offsets.
std::vector<double> dijkstra(const std::vector<std::vector<WeightedEdge>>& graph,
                             const std::vector<std::pair<int, double>>& seeds);

// Exact for vertex_count <= 2000; larger meshes use repeated farthest-point sweeps (a lower estimate).
double graph_diameter(const TriMesh& mesh);

void write_off(const TriMesh& mesh, const std::string& path, const std::string& lengths_csv = "");
TriMesh read_off(const std::string& path, const std::string& lengths_csv = "");

}  // namespace speclab
