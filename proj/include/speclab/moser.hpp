#pragma once

#include <vector>

namespace speclab {

struct XiEvaluation {
  double x = 0.0;
  double p = 3.0;
  long truncation_m = 0;
  double value = 1.0;       // product of the first truncation_m factors
  double tail_bound = 1.0;  // certified: value * tail_bound >= full product
  double upper_closed = 1.0;
};

XiEvaluation xi(double p, double x, double rel_tol = 1e-12);

// exp((p/2) x/(1+x)) (1+x)^(p/2)
double xi_upper_closed(double p, double x);
// (1+x)^p
double xi_upper_poly(double p, double x);
// (4e)^(p/4) x^(p/2), valid for x >= 1
double xi_upper_power(double p, double x);

// Running products of the first 1..m factors.
std::vector<double> moser_partial_products(double p, double x, int m);

double sup_bound_function(double p, double alpha, double D, double lambda);
double sup_bound_oneform(double p, double alpha, double D, double lambda);

}  // namespace speclab
