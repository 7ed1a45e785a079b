#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "speclab/constructions.hpp"
#include "speclab/errors.hpp"

using namespace speclab;

TEST(TubeBlend, Shape) {
  EXPECT_EQ(tube_blend(0.0), 0.0);
  EXPECT_EQ(tube_blend(1.0 / 3.0), 0.0);
  EXPECT_EQ(tube_blend(2.0 / 3.0), 1.0);
  EXPECT_EQ(tube_blend(1.0), 1.0);
  EXPECT_NEAR(tube_blend(0.5), 0.5, 1e-15);
  double prev = 0;
  for (int i = 0; i <= 100; ++i) {
    const double v = tube_blend(i / 100.0);
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(Mushroom, DefaultCapRadius) {
  // Excised cap area 2 pi (1 - cos 1.2) = 4.006; sqrt(V/2)/pi = 0.4505 loses to 2.4/(2 pi).
  EXPECT_NEAR(mushroom_default_cap_radius(2.4, 1.0), 2.4 / (2 * std::numbers::pi), 1e-15);
  const double v = 2 * std::numbers::pi * (1 - std::cos(0.05));
  // Small caps are nearly flat, V ~ pi eps^2 / 4, so the area branch is ~0.1995 eps and eps / (2 pi) wins.
  EXPECT_GT(std::sqrt(v / 2) / std::numbers::pi, 0.1 / (2 * std::numbers::pi));
  EXPECT_NEAR(mushroom_default_cap_radius(0.1, 1.0), 0.1 / (2 * std::numbers::pi), 1e-15);
}

TEST(Mushroom, VolumeMapAndDistortion) {
  for (double delta : {0.1, 0.01, 0.001}) {
    MushroomParams p;
    p.delta = delta;
    const auto c = mushroom(p);
    EXPECT_LT(total_area(c.surface), total_area(c.base)) << delta;
    EXPECT_LT(c.tube_area, 0.5 * c.excised_area);
    EXPECT_NO_THROW(validate_map(c.map, c.surface, c.base));
    // Surjective on vertices: every base vertex is hit by some image corner.
    std::vector<char> hit(c.base.vertex_count(), 0);
    for (const auto& im : c.map.images)
      for (int k = 0; k < 3; ++k)
        if (im.bary[k] == 1.0) hit[c.base.faces[im.face][k]] = 1;
    EXPECT_EQ(std::count(hit.begin(), hit.end(), 0), 0);
    const double gh = gh_distortion(c.map, c.surface, c.base, sample_pairs(c.surface.vertex_count(), 1));
    EXPECT_LT(gh, p.epsilon) << delta;
  }
}

TEST(Mushroom, Preconditions) {
  MushroomParams p;
  p.delta = 0.7;
  EXPECT_THROW(mushroom(p), PreconditionError);
  p.delta = 1e-6;
  p.max_graded_rings = 20;
  EXPECT_THROW(mushroom(p), MeshError);
}

TEST(Mushroom, SweepDecreasesAndBaseIsRound) {
  MushroomParams p;
  const auto s = mushroom_lambda1_sweep(p, {1e-1, 1e-2, 1e-3});
  EXPECT_NEAR(s.base_lambda1, 2.0, 0.06);
  for (size_t i = 1; i < s.points.size(); ++i) EXPECT_LT(s.points[i].lambda1, s.points[i - 1].lambda1);
  EXPECT_GT(s.fitted_constant, 0.0);
  EXPECT_THROW(mushroom_lambda1_sweep(p, {1e-2, 1e-1}), PreconditionError);
}

TEST(CapComplement, MonotoneAndCollapsing) {
  for (int res : {20, 40}) {
    double prev = INFINITY;
    for (double d : {0.2, 0.05, 0.01, 1e-3, 1e-4}) {
      const double l = cap_complement_dirichlet(d, res);
      EXPECT_LT(l, prev) << res << " " << d;
      prev = l;
    }
    EXPECT_LT(prev, 0.2);
  }
}

TEST(CapComplement, ScalesWithRadius) {
  const double a = cap_complement_dirichlet(0.01, 30, 1.0);
  const double b = cap_complement_dirichlet(0.01, 30, 0.5);
  EXPECT_NEAR(b, 4 * a, 1e-8 * b);
}

TEST(Gluing, VolumeHypothesisAndDistortion) {
  GluingParams p;
  const auto c = tube_gluing(p);
  EXPECT_LT(total_area(c.surface), total_area(c.base));
  EXPECT_LE(c.tube_length, p.epsilon / 4);
  EXPECT_NO_THROW(validate_map(c.map, c.surface, c.base));
  const double gh = gh_distortion(c.map, c.surface, c.base, sample_pairs(c.surface.vertex_count(), 1));
  EXPECT_LT(gh, p.epsilon);
  // Scale factor obeys both branches of the min.
  const double ball = 2 * std::numbers::pi * (1 - std::cos(p.epsilon / 4));
  EXPECT_LE(c.scale * c.scale, p.epsilon * p.epsilon / (16 * std::numbers::pi * std::numbers::pi) * (1 + 1e-12));
  EXPECT_LE(c.scale * c.scale, ball / (8 * std::numbers::pi) * (1 + 1e-12));
}
