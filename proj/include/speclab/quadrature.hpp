#pragma once

#include <functional>

namespace speclab {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int intervals = 0;
};

// Adaptive Gauss-Kronrod (7/15) with global bisection of the worst interval.
// Stops when error <= max(abs_tol, rel_tol*|value|).
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-13,
                     int max_intervals = 4000);

}  // namespace speclab
