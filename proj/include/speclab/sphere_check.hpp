#pragma once

#include <limits>
#include <optional>
#include <vector>

namespace speclab {

// Polynomial in the first coordinate x1, restricted to the unit n-sphere.
class ZonalFunction {
 public:
  static constexpr int kMaxDegree = 8;
  ZonalFunction(std::vector<double> coeffs, int n);  // coeffs[k] multiplies x1^k
  int n() const { return n_; }
  int degree() const;
  const std::vector<double>& coeffs() const { return c_; }
  double operator()(double x1) const;
  ZonalFunction derivative() const;

 private:
  std::vector<double> c_;
  int n_;
};

// The positive Laplacian; only defined on span{1, x1, x1^2 - 1/(n+1)}.
ZonalFunction laplacian_on_sphere(const ZonalFunction& f);

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Volume-normalized L^p norm on S^n, p in [1, inf].
double lp_norm(const ZonalFunction& f, double p);
double lp_norm_gauss_jacobi(const ZonalFunction& f, int even_p);  // exact for polynomials
double lp_norm_adaptive(const ZonalFunction& f, double p);
double sup_norm(const ZonalFunction& f);

// Real roots of a polynomial (coefficients ascending) in [lo, hi].
std::vector<double> polynomial_roots(const std::vector<double>& coeffs, double lo, double hi);

struct GaussRule {
  std::vector<double> nodes, weights;
};
// Gauss rule for the weight (1-x)^a (1+x)^b on [-1, 1].
GaussRule gauss_jacobi(int count, double a, double b);

struct CounterexampleReport {
  int n = 0;
  double u_sup = 0.0;
  double lap_u_sup = 0.0;
  double sup_ratio = 0.0;
  double lambda = 0.0;
  std::optional<int> first_k;   // smallest k with the L^{2k} ratio above lambda
  std::vector<double> ratios;   // ratios[k-1] for k = 1..k_max
};

ZonalFunction counterexample_function(int n);  // x1^2 - 1/2
CounterexampleReport counterexample_report(int n, int k_max);

}  // namespace speclab
