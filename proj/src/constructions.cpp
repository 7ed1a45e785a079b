#include "speclab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "speclab/errors.hpp"
#include "speclab/generators.hpp"

namespace speclab {

double tube_blend(double r) {
  auto bump = [](double t) { return t > 0 ? std::exp(-1.0 / t) : 0.0; };
  const double t = 3.0 * (r - 1.0 / 3.0);
  const double a = bump(t), b = bump(1.0 - t);
  return a / (a + b);
}

double mushroom_default_cap_radius(double epsilon, double base_radius) {
  const double excised = 2.0 * std::numbers::pi * base_radius * base_radius *
                         (1.0 - std::cos(0.5 * epsilon / base_radius));
  return std::min(std::sqrt(0.5 * excised) / std::numbers::pi, epsilon / (2.0 * std::numbers::pi));
}

namespace {

constexpr double kPi = std::numbers::pi;

// Rings from the far pole (s = 0) of a sphere of radius R up to geodesic distance `stop` from it.
void base_rings(RevolutionProfile& p, double R, double stop, int rings) {
  for (int j = 0; j <= rings; ++j) {
    const double s = stop * j / rings;
    p.s.push_back(s);
    p.rho.push_back(j == 0 ? 0.0 : R * std::sin(s / R));
  }
}

double band_area(const TriMesh& m, const std::vector<std::vector<int>>& rings, int from, int to) {
  // Faces whose vertices all lie on rings [from, to].
  std::vector<char> in(m.vertex_count(), 0);
  for (int j = from; j <= to; ++j)
    for (int v : rings[j]) in[v] = 1;
  double a = 0.0;
  for (int f = 0; f < m.face_count(); ++f) {
    const auto& t = m.faces[f];
    if (in[t[0]] && in[t[1]] && in[t[2]]) a += face_area(m, f);
  }
  return a;
}

// Base X with cap rings at distance (1 - r_j) * cap from the excision center,
// and the map sending Y ring j to X ring j for base and tube rings, and the
// rest of Y to the center.
Construction assemble(const RevolutionProfile& y_profile, int base_last, const std::vector<double>& tube_r,
                      double R, double cap, int segments) {
  RevolutionProfile xp;
  xp.segments = segments;
  xp.s.assign(y_profile.s.begin(), y_profile.s.begin() + base_last + 1);
  xp.rho.assign(y_profile.rho.begin(), y_profile.rho.begin() + base_last + 1);
  const double top = kPi * R;
  for (double r : tube_r) {
    if (r >= 1.0) break;
    const double d = (1.0 - r) * cap;
    xp.s.push_back(top - d);
    xp.rho.push_back(R * std::sin(d / R));
  }
  xp.s.push_back(top);
  xp.rho.push_back(0.0);
  const auto xm = build_revolution_mesh(xp);
  const auto ym = build_revolution_mesh(y_profile);
  Construction c;
  c.base = xm.mesh;
  c.surface = ym.mesh;
  validate(c.base);
  validate(c.surface);
  const auto vf = vertex_faces(c.base);
  const int center = xm.ring_vertices.back()[0];
  c.map.images.resize(c.surface.vertex_count());
  const int x_rings = int(xm.ring_vertices.size());
  for (int j = 0; j < int(ym.ring_vertices.size()); ++j) {
    for (int q = 0; q < segments; ++q) {
      const int yv = ym.ring_vertices[j][q];
      const int xv = j < x_rings - 1 ? xm.ring_vertices[j][q] : center;
      c.map.images[yv] = vertex_image(c.base, vf, xv);
    }
  }
  return c;
}

}  // namespace

Construction mushroom(const MushroomParams& prm) {
  const double R = prm.base_radius, eps = prm.epsilon, delta = prm.delta;
  if (!(R > 0) || !(eps > 0) || !(eps / 2 < kPi * R)) throw PreconditionError("mushroom: cap must fit inside the base");
  if (!(delta > 0) || !(delta < eps / 4) || !(delta < 1)) throw PreconditionError("mushroom: need 0 < delta < epsilon/4");
  if (prm.segments < 8 || prm.tube_rings < 4 || prm.base_rings < 4 || prm.sphere_rings < 4)
    throw PreconditionError("mushroom: resolution too coarse (segments >= 8, rings >= 4)");
  const double f = prm.cap_radius > 0 ? prm.cap_radius : mushroom_default_cap_radius(eps, R);
  const int m = prm.segments;
  const double neck = std::asin(delta);

  // Rings the small sphere needs between the neck and uniform spacing.
  const double grade = 1.0 + 2.0 * kPi / m;
  const double uniform = kPi / prm.sphere_rings;
  std::vector<double> ts{neck};
  while (ts.back() * (grade - 1.0) < uniform && ts.back() < kPi) {
    ts.push_back(ts.back() * grade);
    if (int(ts.size()) > prm.max_graded_rings)
      throw MeshError("mushroom: delta " + std::to_string(delta) + " needs about " +
                      std::to_string(int(std::ceil(std::log(uniform / ((grade - 1.0) * neck)) / std::log(grade)))) +
                      " graded rings; raise max_graded_rings");
  }
  const double start = ts.back();
  const int rest = std::max(1, int(std::ceil((kPi - start) / uniform)));
  for (int j = 1; j <= rest; ++j) ts.push_back(start + (kPi - start) * j / rest);

  RevolutionProfile p;
  p.segments = m;
  const double base_stop = kPi * R - eps / 2;
  base_rings(p, R, base_stop, prm.base_rings);
  const int base_last = int(p.s.size()) - 1;
  std::vector<double> tube_r;
  for (int j = 1; j <= prm.tube_rings; ++j) {
    const double r = double(j) / prm.tube_rings;
    const double lam = tube_blend(r);
    const double rb = R * std::sin((1.0 - r) * eps / (2.0 * R));
    const double rs = f * std::sin(r * neck);
    p.s.push_back(base_stop + delta * r);
    p.rho.push_back(std::sqrt((1.0 - lam) * rb * rb + lam * rs * rs));
    tube_r.push_back(r);
  }
  const int tube_last = int(p.s.size()) - 1;
  const double s_neck = p.s.back();
  for (size_t j = 1; j < ts.size(); ++j) {
    p.s.push_back(s_neck + f * (ts[j] - neck));
    p.rho.push_back(j + 1 == ts.size() ? 0.0 : f * std::sin(ts[j]));
  }

  Construction c = assemble(p, base_last, tube_r, R, eps / 2, m);
  const auto ym = build_revolution_mesh(p);
  c.cap_radius = f;
  c.tube_length = delta;
  c.excised_area = 2.0 * kPi * R * R * (1.0 - std::cos(0.5 * eps / R));
  c.tube_area = band_area(c.surface, ym.ring_vertices, base_last, tube_last);
  c.attached_area = total_area(c.surface) - band_area(c.surface, ym.ring_vertices, 0, tube_last);
  if (!(c.tube_area < 0.5 * c.excised_area)) throw PreconditionError("mushroom: tube area must stay below half the cap");
  return c;
}

SweepResult mushroom_lambda1_sweep(const MushroomParams& params, const std::vector<double>& deltas,
                                   const EigOptions& opt) {
  if (deltas.empty()) throw PreconditionError("sweep: no deltas");
  for (size_t i = 1; i < deltas.size(); ++i)
    if (!(deltas[i] < deltas[i - 1])) throw PreconditionError("sweep: deltas must be decreasing");
  SweepResult out;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < deltas.size(); ++i) {
    MushroomParams p = params;
    p.delta = deltas[i];
    const auto c = mushroom(p);
    const auto spec = smallest_eigs(cotan_laplacian(c.surface), 2, opt);
    if (i == 0) out.base_lambda1 = smallest_eigs(cotan_laplacian(c.base), 2, opt).values(1);
    SweepPoint pt;
    pt.delta = deltas[i];
    pt.lambda1 = spec.values(1);
    if (i > 0) {
      pt.measured_ratio = out.points.back().lambda1 / pt.lambda1;
      pt.predicted_ratio = std::log(std::asin(deltas[i])) / std::log(std::asin(deltas[i - 1]));
    }
    const double xval = 1.0 / -std::log(std::asin(deltas[i]));
    sxx += xval * xval;
    sxy += xval * pt.lambda1;
    out.points.push_back(pt);
  }
  out.fitted_constant = sxy / sxx;
  return out;
}

double cap_complement_dirichlet(double delta, int resolution, double radius, const EigOptions& opt) {
  if (!(delta > 0 && delta < 0.3)) throw PreconditionError("cap_complement_dirichlet: delta must lie in (0, 0.3)");
  if (resolution < 4) throw PreconditionError("cap_complement_dirichlet: resolution must be >= 4");
  if (!(radius > 0)) throw PreconditionError("cap_complement_dirichlet: radius must be positive");
  const int m = 16;
  const double grade = 1.0 + 2.0 * kPi / m, uniform = kPi / resolution;
  const double neck = std::asin(delta);
  std::vector<double> ts{neck};
  while (ts.back() * (grade - 1.0) < uniform) ts.push_back(ts.back() * grade);
  const double start = ts.back();
  const int rest = std::max(1, int(std::ceil((kPi - start) / uniform)));
  for (int j = 1; j <= rest; ++j) ts.push_back(start + (kPi - start) * j / rest);
  RevolutionProfile p;
  p.segments = m;
  p.pole_start = false;
  for (size_t j = 0; j < ts.size(); ++j) {
    p.s.push_back(radius * (ts[j] - neck));
    p.rho.push_back(j + 1 == ts.size() ? 0.0 : radius * std::sin(ts[j]));
  }
  const auto rm = build_revolution_mesh(p);
  validate(rm.mesh);
  std::vector<int> keep;
  for (int v = m; v < rm.mesh.vertex_count(); ++v) keep.push_back(v);  // drop the boundary ring
  const auto ops = restrict_to(cotan_laplacian(rm.mesh), keep);
  return smallest_eigs(ops, 1, opt).values(0);
}

Construction tube_gluing(const GluingParams& prm) {
  const double R = prm.base_radius, eps = prm.epsilon, Rz = prm.attachment_radius;
  if (!(R > 0 && Rz > 0 && eps > 0) || !(eps / 4 < kPi * R)) throw PreconditionError("tube_gluing: bad radii or epsilon");
  if (prm.segments < 8 || prm.tube_rings < 2 || prm.base_rings < 4 || prm.attachment_rings < 2)
    throw PreconditionError("tube_gluing: resolution too coarse");
  const double excise = eps / 4;
  const double ball = 2.0 * kPi * R * R * (1.0 - std::cos(excise / R));
  const double diam_z = kPi * Rz, vol_z = 4.0 * kPi * Rz * Rz;
  // With n = 2 the volume branch of the scale factor has exponent 2/n = 1.
  const double alpha2 = std::min(eps * eps / (16.0 * diam_z * diam_z), ball / (2.0 * vol_z));
  const double alpha = std::sqrt(alpha2);
  const double rz = alpha * Rz;  // scaled attachment radius; removing half its injectivity radius leaves a hemisphere
  const double rx = R * std::sin(excise / R);
  auto rho_tube = [&](double r) { return std::sqrt(r * rz * rz + (1.0 - r) * rx * rx); };
  // Integral of the circle length along the tube parameter, by Simpson on a fine grid.
  const int fine = 2000;
  double integral = 0.0;
  for (int i = 0; i <= fine; ++i) {
    const double w = (i == 0 || i == fine) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    integral += w * 2.0 * kPi * rho_tube(double(i) / fine);
  }
  integral /= 3.0 * fine;
  const double length = std::min(eps / 4, ball / (2.0 * integral));

  RevolutionProfile p;
  p.segments = prm.segments;
  const double base_stop = kPi * R - excise;
  base_rings(p, R, base_stop, prm.base_rings);
  const int base_last = int(p.s.size()) - 1;
  std::vector<double> tube_r;
  for (int j = 1; j <= prm.tube_rings; ++j) {
    const double r = double(j) / prm.tube_rings;
    p.s.push_back(base_stop + length * r);
    p.rho.push_back(rho_tube(r));
    tube_r.push_back(r);
  }
  const int tube_last = int(p.s.size()) - 1;
  const double s0 = p.s.back();
  for (int j = 1; j <= prm.attachment_rings; ++j) {
    const double t = 0.5 * kPi + 0.5 * kPi * j / prm.attachment_rings;
    p.s.push_back(s0 + rz * (t - 0.5 * kPi));
    p.rho.push_back(j == prm.attachment_rings ? 0.0 : rz * std::sin(t));
  }
  Construction c = assemble(p, base_last, tube_r, R, excise, prm.segments);
  const auto ym = build_revolution_mesh(p);
  c.excised_area = ball;
  c.tube_length = length;
  c.scale = alpha;
  c.cap_radius = rz;
  c.tube_area = band_area(c.surface, ym.ring_vertices, base_last, tube_last);
  c.attached_area = total_area(c.surface) - band_area(c.surface, ym.ring_vertices, 0, tube_last);
  return c;
}

}  // namespace speclab
