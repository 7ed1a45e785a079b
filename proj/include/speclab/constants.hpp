#pragma once

#include "json.hpp"

namespace speclab {

struct BoundInputs {
  int n = 3;
  double D = 1.0;
  double i0 = 1.0;
  double kappa = 1.0;
  double epsilon = 0.0;
  double vol_y = 1.0;
  double vol_x = 1.0;
  double epsilon0 = 1.0;
  double p = 3.0;  // only read when n == 2
};

// Throws PreconditionError on invalid fields.
void validate(const BoundInputs& in);

// Sobolev exponent: p when n == 2, otherwise n.
double sobolev_exponent(const BoundInputs& in);

struct QuadErrors {
  double h = 0.0, gamma = 0.0, b = 0.0;
};

struct SobolevConstants {
  double alpha = 0.0;
  double h_alpha = 0.0;
  double gamma_alpha = 0.0;
  double b_alpha = 0.0;
  QuadErrors quad_error;
};

struct ComparisonFactor {
  double c1 = 0.0;
  double c2 = 0.0;
  double eta = 0.0;
  double multiplier = 1.0;
  bool feasible = false;
  double epsilon_one = 0.0;
  bool epsilon_one_degenerate = false;
};

struct EpsilonOne {
  double value = 0.0;
  bool degenerate = false;  // kappa == 0: curvature branch undefined, value is epsilon0
};

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;
};

ValueWithError h_alpha_detail(double p, double alpha, double quad_tol = 1e-12);
ValueWithError gamma_alpha_detail(double p, double alpha, double quad_tol = 1e-12);

double h_alpha(double p, double alpha);
double gamma_alpha(double p, double alpha);
SobolevConstants b_alpha(double p, double alpha, double quad_tol = 1e-12);

EpsilonOne epsilon_one(const BoundInputs& in);
double eta_of_epsilon(int n, double kappa, double epsilon);
double c1(int n);
double c2(int n, double p, double alpha, double Lambda, double quad_tol = 1e-12);
ComparisonFactor theorem_bound(const BoundInputs& in, double lambda_x, double quad_tol = 1e-12);
double prop13_bound(int n, double p, double alpha, double D, double eta, double lambda_x);

double unit_ball_volume(int n);
double weyl_estimate(int n, double volume, double k);

// Two-sided eigenvalue shells with caller-supplied constants.
double upper_shell(double c_const, double volume, int n, double k);
double lower_shell(double gamma_const, double diameter, int n, double k);

nlohmann::json bounds_report(const BoundInputs& in, double lambda_x, double quad_tol = 1e-12);

}  // namespace speclab
