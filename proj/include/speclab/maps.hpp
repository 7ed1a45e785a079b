#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "speclab/eigensolver.hpp"
#include "speclab/mesh.hpp"
#include "speclab/operators.hpp"

namespace speclab {

struct ImagePoint {
  int face = 0;
  std::array<double, 3> bary{1.0, 0.0, 0.0};
};

// Piecewise-affine map from a source mesh Y to a target mesh X, one image
// point per source vertex. The meshes themselves are passed alongside.
struct SimplicialMap {
  std::vector<ImagePoint> images;
};

ImagePoint vertex_image(const TriMesh& target, const std::vector<std::vector<int>>& vertex_faces, int v);
SimplicialMap identity_map(const TriMesh& mesh);
void validate_map(const SimplicialMap& map, const TriMesh& source, const TriMesh& target);

SparseMatrix pullback_matrix(const SimplicialMap& map, const TriMesh& target);
Eigen::VectorXd pullback(const Eigen::VectorXd& f_on_target, const SimplicialMap& map, const TriMesh& target);

struct MinimaxReport {
  int i_max = 0;
  double delta = 0.0;    // worst normalized L2 loss
  double epsilon = 0.0;  // worst normalized energy inflation
  bool feasible = false; // delta < 1
  std::vector<double> lambda_x, lambda_y, ritz_y, bound;
  int violations = 0;
};

MinimaxReport minimax_check(const TriMesh& y, const TriMesh& x, const SimplicialMap& map, int i_max,
                            const EigOptions& opt = {});
MinimaxReport minimax_check(const TriMesh& y, const TriMesh& x, const SimplicialMap& map, int i_max,
                            const SpectrumResult& spec_y, const SpectrumResult& spec_x);

struct MapStatistics {
  std::vector<double> energy;    // per source face: trace of the pullback metric
  std::vector<double> jacobian;  // per source face: sqrt(det)
  double low_jacobian_fraction = 0.0;  // area fraction with jacobian <= 1 - sqrt(eta)
  double fraction_bound = 0.0;         // 2 sqrt(eta)
  bool jacobian_bounded = false;       // jacobian <= 1 + eta everywhere
  bool energy_bounded = false;         // energy <= 2 (1 + eta) everywhere
  bool volume_condition = false;       // Vol(Y)(1 - eta) <= Vol(X)
  bool preconditions_hold = false;
  double max_jacobian = 0.0, max_energy = 0.0;
  int chord_fallback_faces = 0;        // faces whose image spans no common target face
};

MapStatistics map_statistics(const SimplicialMap& map, const TriMesh& y, const TriMesh& x, double eta);

using VertexPairs = std::vector<std::pair<int, int>>;
// All pairs up to 2000 vertices, otherwise 200 sources x 500 targets drawn with the seed.
VertexPairs sample_pairs(int vertex_count, std::uint64_t seed);
double gh_distortion(const SimplicialMap& map, const TriMesh& y, const TriMesh& x, const VertexPairs& pairs);

}  // namespace speclab
