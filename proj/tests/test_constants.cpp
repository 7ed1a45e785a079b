#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include "speclab/constants.hpp"
#include "speclab/errors.hpp"

using namespace speclab;

namespace {

// Independent oracles built on Boost's double-exponential quadrature.
double oracle_h(double p, double a) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double i = ts.integrate([p](double t) { return std::pow(std::cosh(t), p - 1); }, 0.0, a / 2);
  return a / i;
}

double oracle_gamma(double p, double a) {
  const double c = a / oracle_h(p, a);
  boost::math::quadrature::tanh_sinh<double> ts;
  const double i =
      ts.integrate([p, c](double t) { return std::pow(c * std::cosh(t) + std::sinh(t) / p, p - 1); }, 0.0, a);
  return a * std::pow(i, -1.0 / p);
}

double gamma_limit(double p) { return std::pow(std::pow(0.5 + 1 / p, p) - std::pow(2.0, -p), -1 / p); }

BoundInputs sample_inputs() {
  BoundInputs in;
  in.n = 3;
  in.kappa = 1.0;
  in.D = 1.0;
  in.i0 = 0.1;
  in.epsilon = 1e-16;
  in.epsilon0 = 1e-3;
  in.vol_x = 1.0;
  in.vol_y = 1.0;
  return in;
}

}  // namespace

TEST(HAlpha, ZeroLimitIsTwo) { EXPECT_EQ(h_alpha(3, 0), 2.0); }

TEST(HAlpha, SmallAlphaApproachesTwo) { EXPECT_NEAR(h_alpha(3, 1e-4), 2.0, 1e-6); }

TEST(HAlpha, MatchesIndependentQuadrature) {
  // alpha = 2: alpha / int_0^1 cosh^2, which has the closed form 1/2 + sinh(2)/4.
  const double closed = 2.0 / (0.5 + std::sinh(2.0) / 4.0);
  EXPECT_NEAR(h_alpha(3, 2), closed, 1e-10);
  EXPECT_NEAR(h_alpha(3, 2), oracle_h(3, 2), 1e-10);
}

TEST(HAlpha, NonFiniteThrows) {
  EXPECT_THROW(h_alpha(3, NAN), DomainError);
  EXPECT_THROW(h_alpha(3, INFINITY), DomainError);
}

TEST(GammaAlpha, ZeroLimitClosedForm) {
  EXPECT_NEAR(gamma_alpha(3, 0), std::pow(std::pow(5.0 / 6.0, 3) - 0.125, -1.0 / 3), 1e-15);
  EXPECT_NEAR(gamma_alpha(3, 0), 1.30140, 5e-5);
}

TEST(GammaAlpha, SmallAlphaApproachesLimit) { EXPECT_NEAR(gamma_alpha(3, 1e-4), gamma_limit(3), 1e-5); }

TEST(GammaAlpha, MatchesIndependentQuadrature) { EXPECT_NEAR(gamma_alpha(4, 1), oracle_gamma(4, 1), 1e-10); }

TEST(BAlpha, ZeroValue) {
  const auto s = b_alpha(3, 0);
  EXPECT_NEAR(s.b_alpha, 4.0 / gamma_limit(3) + 1.0, 1e-14);
  EXPECT_NEAR(s.b_alpha, 4.0736, 1e-4);
  EXPECT_EQ(s.quad_error.b, 0.0);
}

TEST(BAlpha, AssemblyIdentityAndErrorBound) {
  for (double a : {0.5, 1.0, 3.0, 7.0}) {
    const auto s = b_alpha(3, a);
    EXPECT_DOUBLE_EQ(s.b_alpha, 4.0 / s.gamma_alpha + 2.0 / s.h_alpha);
    EXPECT_GT(s.quad_error.b, 0.0);
    EXPECT_LT(s.quad_error.b, 1e-9);
    const double oracle = 4.0 / oracle_gamma(3, a) + 2.0 / oracle_h(3, a);
    EXPECT_NEAR(s.b_alpha, oracle, 1e-10 * std::max(1.0, oracle));
  }
}

TEST(BAlpha, IncreasesWithAlpha) { EXPECT_GT(b_alpha(3, 1).b_alpha, b_alpha(3, 0).b_alpha); }

TEST(BAlpha, NanThrows) { EXPECT_THROW(b_alpha(3, NAN), DomainError); }

TEST(SobolevConstants, GridMonotoneAndPositive) {
  for (double p : {3.0, 4.0, 6.0}) {
    double h_prev = INFINITY, g_prev = INFINITY;
    for (int i = 0; i < 200; ++i) {
      const double a = 20.0 * i / 199.0;
      const auto s = b_alpha(p, a);
      EXPECT_GT(s.h_alpha, 0);
      EXPECT_GT(s.gamma_alpha, 0);
      EXPECT_GT(s.b_alpha, 0);
      EXPECT_LE(s.h_alpha, h_prev * (1 + 1e-12));
      EXPECT_LE(s.gamma_alpha, g_prev * (1 + 1e-12));
      h_prev = s.h_alpha;
      g_prev = s.gamma_alpha;
    }
  }
}

TEST(EpsilonOne, CurvatureBranch) {
  BoundInputs in;
  in.n = 3;
  in.kappa = 1;
  in.epsilon0 = 1;
  const double expected = std::pow((std::pow(10.0 / 9.0, 2.0 / 3.0) - 1.0) / 80.0, 4);
  EXPECT_NEAR(epsilon_one(in).value, expected, 1e-25);
  EXPECT_NEAR(expected, 6.84e-13, 0.01e-13);
}

TEST(EpsilonOne, DominatedByEpsilonZero) {
  BoundInputs in;
  in.n = 3;
  in.kappa = 1;
  in.epsilon0 = 1e-20;
  EXPECT_EQ(epsilon_one(in).value, 1e-20);
}

TEST(EpsilonOne, UsesLiteralDimensionTwo) {
  BoundInputs in;
  in.n = 2;
  in.p = 5;
  in.kappa = 2;
  in.epsilon0 = 1;
  const double expected = std::pow((10.0 / 9.0 - 1.0) / 60.0, 4) / 2.0;
  EXPECT_NEAR(epsilon_one(in).value, expected, 1e-12 * expected);
}

TEST(EpsilonOne, ZeroCurvatureFlagged) {
  BoundInputs in;
  in.kappa = 0;
  in.epsilon0 = 0.3;
  const auto e = epsilon_one(in);
  EXPECT_TRUE(e.degenerate);
  EXPECT_EQ(e.value, 0.3);
}

TEST(EpsilonOne, NeverExceedsEpsilonZero) {
  for (int n = 2; n <= 8; ++n)
    for (double k : {1e-6, 1e-2, 1.0, 1e3})
      for (double e0 : {1e-30, 1e-12, 1.0, 1e6}) {
        BoundInputs in;
        in.n = n;
        in.kappa = k;
        in.epsilon0 = e0;
        EXPECT_LE(epsilon_one(in).value, e0);
      }
}

TEST(EtaOfEpsilon, Values) {
  EXPECT_EQ(eta_of_epsilon(3, 1, 0), 0.0);
  const double ke = std::pow(1.0 / 60.0, 4);
  EXPECT_NEAR(eta_of_epsilon(3, 1, ke), std::pow(7.0 / 3.0, 1.5) - 1.0, 1e-12);
  EXPECT_NEAR(eta_of_epsilon(3, 1, ke), 2.5642, 1e-4);
}

TEST(EtaOfEpsilon, BelowOneNinthInsideEpsilonOne) {
  for (int n = 2; n <= 10; ++n) {
    const double second = std::pow((std::pow(10.0 / 9.0, 2.0 / n) - 1.0) / (20.0 * (n + 1.0)), 4);
    for (double kappa : {0.01, 1.0, 100.0})
      for (int i = 1; i < 100; ++i) {
        const double eps = second / kappa * i / 100.0;
        EXPECT_LT(eta_of_epsilon(n, kappa, eps), 1.0 / 9.0);
      }
  }
}

TEST(C2, HandArithmetic) {
  EXPECT_NEAR(c2(3, 3, 0, 0), 16.0 * (7.0 * std::exp(3.0) + 2.0), 1e-9);
  EXPECT_NEAR(c2(3, 3, 0, 0), 2281.58, 0.01);
}

TEST(C2, IncreasingInLambda) {
  double prev = 0;
  for (double l : {0.0, 0.1, 1.0, 10.0, 100.0}) {
    const double v = c2(3, 3, 1.0, l);
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(C2, DimensionTwoUsesExponentOnlyInsideB) {
  const double b = b_alpha(5.0, 0.7).b_alpha;
  const double inner = 1.0 + b * std::sqrt(2.0 + 1.0 * 0.49);
  const double expected = 12.0 * (5.0 * std::exp(2.0) * inner * inner + 2.0);
  EXPECT_NEAR(c2(2, 5.0, 0.7, 2.0), expected, 1e-9 * expected);
}

TEST(TheoremBound, ZeroEpsilonIsIdentity) {
  auto in = sample_inputs();
  in.epsilon = 0;
  in.vol_y = 0.99;  // the volume hypothesis is strict
  const auto f = theorem_bound(in, 10);
  EXPECT_EQ(f.multiplier, 1.0);
  EXPECT_TRUE(f.feasible);
}

TEST(TheoremBound, VolumeHypothesisFlips) {
  auto in = sample_inputs();
  in.epsilon = 1e-16;
  const double shrink = 1.0 - 10.0 * 3 * 4 * std::pow(1e-16, 0.25);
  in.vol_y = 0.999 * in.vol_x / shrink;
  EXPECT_TRUE(theorem_bound(in, 10).feasible);
  in.vol_y = 1.001 * in.vol_x / shrink;
  EXPECT_FALSE(theorem_bound(in, 10).feasible);
}

TEST(TheoremBound, IndependentArithmetic) {
  auto in = sample_inputs();
  const auto f = theorem_bound(in, 10);
  const double ke = 1e-16;
  const double c1v = 14.0 * 2.0 * 2.0;
  const double b = 4.0 / oracle_gamma(3, 1) + 2.0 / oracle_h(3, 1);
  const double c2v = 16.0 * (7.0 * std::exp(3.0) * std::pow(1.0 + b * std::sqrt(10.0 + 2.0), 3) + 2.0);
  const double expected = (1.0 + c1v * std::pow(ke, 1.0 / 16)) * (1.0 + c2v * std::pow(ke, 1.0 / 8));
  EXPECT_NEAR(f.multiplier, expected, 1e-10 * expected);
  EXPECT_NEAR(f.c1, c1v, 1e-12);
}

TEST(TheoremBound, MonotoneInEpsilon) {
  auto in = sample_inputs();
  double prev = 0;
  for (int i = 0; i <= 60; ++i) {
    in.epsilon = i == 0 ? 0.0 : std::pow(10.0, -30 + 0.5 * i);
    const double m = theorem_bound(in, 10).multiplier;
    EXPECT_GE(m, 1.0);
    EXPECT_GE(m, prev);
    prev = m;
  }
}

TEST(TheoremBound, HomothetyInvariance) {
  auto in = sample_inputs();
  in.epsilon = 1e-14;
  in.D = 1.3;
  in.kappa = 0.7;
  const double lambda = 4.0;
  const double m0 = theorem_bound(in, lambda).multiplier;
  for (double s : {0.5, 2.0, 10.0}) {
    auto r = in;
    r.kappa /= s;
    r.D *= s;
    r.epsilon *= s;
    r.i0 *= s;
    r.epsilon0 *= s;
    r.vol_x *= s * s * s;
    r.vol_y *= s * s * s;
    EXPECT_NEAR(theorem_bound(r, lambda / (s * s)).multiplier, m0, 1e-12 * m0);
  }
}

TEST(Prop13Bound, LimitAndValues) {
  EXPECT_NEAR(prop13_bound(3, 3, 0.0, 1.0, 1e-30, 5.0), 5.0, 1e-5);
  // D^2 lambda is negligible here, so the bracket reduces to 7 e^3 + 2.
  const double got = prop13_bound(3, 3, 0.0, 1e-12, 1.0 / 9.0, 1.0);
  const double expected = (1.0 + 14.0 * std::pow(1.0 / 9.0, 0.25)) * (1.0 + (7.0 * std::exp(3.0) + 2.0) / 3.0);
  EXPECT_NEAR(got, expected, 1e-8 * expected);
}

TEST(Prop13Bound, RejectsLargeEta) {
  EXPECT_THROW(prop13_bound(3, 3, 0, 1, 0.2, 1), PreconditionError);
  EXPECT_THROW(prop13_bound(3, 3, 0, 1, 0.0, 1), PreconditionError);
}

TEST(Weyl, UnitBallVolumes) {
  EXPECT_NEAR(unit_ball_volume(2), std::numbers::pi, 1e-15);
  EXPECT_NEAR(unit_ball_volume(3), 4.0 * std::numbers::pi / 3.0, 1e-14);
}

TEST(Weyl, RoundSphereRate) {
  // n = 2, area 4 pi: (2 pi)^2 / (pi * 4 pi) * k = k.
  for (double k : {1.0, 10.0, 1000.0}) EXPECT_NEAR(weyl_estimate(2, 4 * std::numbers::pi, k), k, 1e-12 * k);
}

TEST(Weyl, Homogeneity) {
  for (int n : {2, 3, 5}) {
    const double v = 2.5;
    EXPECT_NEAR(weyl_estimate(n, std::pow(2.0, n) * v, 7) / weyl_estimate(n, v, 7), 0.25, 1e-14);
  }
}

TEST(Weyl, SubstitutionCase) {
  // Volume chosen so Vol(B^3) * volume = 1.
  const double w = weyl_estimate(3, 1.0 / unit_ball_volume(3), 1);
  EXPECT_NEAR(w, 4.0 * std::numbers::pi * std::numbers::pi, 1e-12);
}

TEST(Shells, Scaling) {
  EXPECT_NEAR(upper_shell(3.0, 4.0, 2, 5.0), 3.0 / 4.0 * 5.0, 1e-15);
  EXPECT_NEAR(lower_shell(2.0, 2.0, 2, 5.0), 2.0 / 4.0 * 5.0, 1e-15);
}

TEST(Report, Schema) {
  const auto j = bounds_report(sample_inputs(), 10);
  for (const char* k : {"H", "Gamma", "B", "quad_error"}) EXPECT_TRUE(j["constants"].contains(k));
  for (const char* k : {"c1", "c2", "eta", "multiplier", "feasible"}) EXPECT_TRUE(j["factor"].contains(k));
  EXPECT_TRUE(j.contains("inputs"));
}

TEST(Validate, RejectsBadInputs) {
  auto in = sample_inputs();
  in.n = 1;
  EXPECT_THROW(validate(in), PreconditionError);
  in = sample_inputs();
  in.D = 0;
  EXPECT_THROW(validate(in), PreconditionError);
  in = sample_inputs();
  in.n = 2;
  in.p = 2;
  EXPECT_THROW(validate(in), PreconditionError);
}
