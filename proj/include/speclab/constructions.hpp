#pragma once

#include <vector>

#include "speclab/eigensolver.hpp"
#include "speclab/maps.hpp"
#include "speclab/mesh.hpp"

namespace speclab {

// Smoothstep built from exp(-1/t) bumps: 0 on [0, 1/3], 1 on [2/3, 1].
double tube_blend(double r);

// A round base sphere with a small sphere attached through a thin tube.
struct MushroomParams {
  double epsilon = 2.4;       // excised cap has geodesic radius epsilon/2
  double delta = 0.01;        // tube length; the small sphere loses a cap of angle asin(delta)
  double base_radius = 1.0;
  double cap_radius = 0.0;    // small-sphere radius; <= 0 selects the default formula
  int segments = 24;
  int base_rings = 40;
  int tube_rings = 24;
  int sphere_rings = 30;      // uniform rings on the small sphere
  int max_graded_rings = 400; // budget for the rings graded toward the neck
};

// min{ sqrt(V/2) / vol(unit disk), epsilon / (2 pi) } with V the area of the excised cap.
double mushroom_default_cap_radius(double epsilon, double base_radius);

struct Construction {
  TriMesh base;         // round sphere discretized with rings matching the glued surface
  TriMesh surface;      // glued surface Y
  SimplicialMap map;    // Y -> base, identity off the excised cap
  double excised_area = 0.0;
  double tube_area = 0.0;
  double attached_area = 0.0;  // small sphere or rescaled attachment
  double cap_radius = 0.0;
  double tube_length = 0.0;
  double scale = 0.0;          // attachment rescaling factor (gluing only)
};

Construction mushroom(const MushroomParams& params);

struct SweepPoint {
  double delta = 0.0;
  double lambda1 = 0.0;
  double measured_ratio = 0.0;   // lambda1(previous delta) / lambda1(this delta)
  double predicted_ratio = 0.0;  // log(asin this) / log(asin previous)
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double fitted_constant = 0.0;  // least squares c in lambda1 ~ c / (-log asin delta)
  double base_lambda1 = 0.0;
};

SweepResult mushroom_lambda1_sweep(const MushroomParams& params, const std::vector<double>& deltas,
                                   const EigOptions& opt = {});

// First Dirichlet eigenvalue on a sphere of the given radius minus a cap of angle asin(delta).
double cap_complement_dirichlet(double delta, int resolution, double radius = 1.0, const EigOptions& opt = {});

// Connected sum of a round sphere with a rescaled round attachment through a tube.
struct GluingParams {
  double epsilon = 0.6;
  double base_radius = 1.0;
  double attachment_radius = 1.0;
  int segments = 24;
  int base_rings = 40;
  int tube_rings = 12;
  int attachment_rings = 12;
};

Construction tube_gluing(const GluingParams& params);

}  // namespace speclab
