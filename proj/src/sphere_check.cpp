#include "speclab/sphere_check.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "speclab/errors.hpp"
#include "speclab/quadrature.hpp"

namespace speclab {

ZonalFunction::ZonalFunction(std::vector<double> coeffs, int n) : c_(std::move(coeffs)), n_(n) {
  if (n < 2) throw PreconditionError("ZonalFunction: n must be >= 2");
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
  if (int(c_.size()) - 1 > kMaxDegree) throw PreconditionError("ZonalFunction: degree exceeds 8");
  for (double v : c_)
    if (!std::isfinite(v)) throw PreconditionError("ZonalFunction: non-finite coefficient");
}

int ZonalFunction::degree() const { return int(c_.size()) - 1; }

double ZonalFunction::operator()(double x) const {
  double s = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
  return s;
}

ZonalFunction ZonalFunction::derivative() const {
  std::vector<double> d;
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(k * c_[k]);
  return ZonalFunction(d, n_);
}

ZonalFunction laplacian_on_sphere(const ZonalFunction& f) {
  if (f.degree() > 2)
    throw UnsupportedFunctionError("laplacian_on_sphere: function outside span{1, x1, x1^2 - 1/(n+1)}");
  const int n = f.n();
  std::vector<double> c = f.coeffs();
  c.resize(3, 0.0);
  // c0 + c1 x + c2 (x^2 - 1/(n+1)) + c2/(n+1)
  const double l1 = n, l2 = 2.0 * (n + 1.0);
  return ZonalFunction({-l2 * c[2] / (n + 1.0), l1 * c[1], l2 * c[2]}, n);
}

namespace {

double eval(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

std::vector<double> deriv(const std::vector<double>& c) {
  std::vector<double> d;
  for (size_t k = 1; k < c.size(); ++k) d.push_back(k * c[k]);
  return d;
}

double bisect(const std::vector<double>& c, double a, double b, double fa) {
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = eval(c, m);
    if (fm == 0.0) return m;
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> polynomial_roots(const std::vector<double>& coeffs, double lo, double hi) {
  std::vector<double> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  std::vector<double> roots;
  if (c.size() <= 1) return roots;
  if (c.size() == 2) {
    const double r = -c[0] / c[1];
    if (r >= lo && r <= hi) roots.push_back(r);
    return roots;
  }
  // Critical points split [lo, hi] into monotone pieces.
  std::vector<double> cuts{lo};
  for (double r : polynomial_roots(deriv(c), lo, hi))
    if (r > cuts.back()) cuts.push_back(r);
  if (hi > cuts.back()) cuts.push_back(hi);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    const double fa = eval(c, a), fb = eval(c, b);
    if (fa == 0.0) {
      if (roots.empty() || roots.back() != a) roots.push_back(a);
    } else if (fb != 0.0 && (fa < 0) != (fb < 0)) {
      roots.push_back(bisect(c, a, b, fa));
    }
  }
  if (eval(c, cuts.back()) == 0.0 && (roots.empty() || roots.back() != cuts.back()))
    roots.push_back(cuts.back());
  return roots;
}

double sup_norm(const ZonalFunction& f) {
  double m = std::max(std::abs(f(-1.0)), std::abs(f(1.0)));
  for (double r : polynomial_roots(f.derivative().coeffs(), -1.0, 1.0)) m = std::max(m, std::abs(f(r)));
  return m;
}

GaussRule gauss_jacobi(int count, double a, double b) {
  if (count < 1) throw PreconditionError("gauss_jacobi: count must be >= 1");
  Eigen::VectorXd diag(count), sub(std::max(count - 1, 0));
  for (int k = 0; k < count; ++k) {
    const double s = 2.0 * k + a + b;
    diag(k) = (s == 0.0 || (s + 2.0) == 0.0) ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    if (k + 1 < count) {
      const double j = k + 1;
      const double t = 2.0 * j + a + b;
      sub(k) = std::sqrt(4.0 * j * (j + a) * (j + b) * (j + a + b) / (t * t * (t + 1.0) * (t - 1.0)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const double mu0 = std::pow(2.0, a + b + 1.0) * std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                                                           std::lgamma(a + b + 2.0));
  GaussRule g;
  for (int k = 0; k < count; ++k) {
    g.nodes.push_back(es.eigenvalues()(k));
    const double v = es.eigenvectors()(0, k);
    g.weights.push_back(mu0 * v * v);
  }
  return g;
}

double lp_norm_gauss_jacobi(const ZonalFunction& f, int even_p) {
  if (even_p < 2 || even_p % 2 != 0) throw PreconditionError("lp_norm_gauss_jacobi: exponent must be even");
  const double m = sup_norm(f);
  if (m == 0.0) return 0.0;
  const int deg = std::max(f.degree(), 0);
  const int count = std::max(2, (even_p * deg) / 2 + 1);
  const double a = 0.5 * (f.n() - 2.0);
  const auto rule = gauss_jacobi(count, a, a);
  double num = 0.0, den = 0.0;
  for (int k = 0; k < count; ++k) {
    num += rule.weights[k] * std::pow(std::abs(f(rule.nodes[k])) / m, even_p);
    den += rule.weights[k];
  }
  return m * std::pow(num / den, 1.0 / even_p);
}

double lp_norm_adaptive(const ZonalFunction& f, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw PreconditionError("lp_norm_adaptive: p must be finite and >= 1");
  const double m = sup_norm(f);
  if (m == 0.0) return 0.0;
  const int n = f.n();
  std::vector<double> cuts{0.0, std::numbers::pi};
  for (double r : polynomial_roots(f.coeffs(), -1.0, 1.0)) cuts.push_back(std::acos(r));
  for (double r : polynomial_roots(f.derivative().coeffs(), -1.0, 1.0)) cuts.push_back(std::acos(r));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto weight = [n](double t) { return std::pow(std::sin(t), n - 1.0); };
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    num += integrate([&](double t) { return std::pow(std::abs(f(std::cos(t))) / m, p) * weight(t); }, a, b, 0.0,
                     1e-13, 20000)
               .value;
    den += integrate(weight, a, b, 0.0, 1e-14).value;
  }
  return m * std::pow(num / den, 1.0 / p);
}

double lp_norm(const ZonalFunction& f, double p) {
  if (std::isinf(p) && p > 0) return sup_norm(f);
  if (!(p >= 1.0)) throw PreconditionError("lp_norm: p must be >= 1");
  const double k = p / 2.0;
  if (k == std::floor(k) && k * std::max(f.degree(), 0) + 1 <= 600) return lp_norm_gauss_jacobi(f, int(p));
  return lp_norm_adaptive(f, p);
}

ZonalFunction counterexample_function(int n) { return ZonalFunction({-0.5, 0.0, 1.0}, n); }

CounterexampleReport counterexample_report(int n, int k_max) {
  if (n < 2 || k_max < 1) throw PreconditionError("counterexample_report: n >= 2 and k_max >= 1");
  const auto u = counterexample_function(n);
  const auto lu = laplacian_on_sphere(u);
  CounterexampleReport r;
  r.n = n;
  r.u_sup = sup_norm(u);
  r.lap_u_sup = sup_norm(lu);
  r.sup_ratio = r.lap_u_sup / r.u_sup;
  r.lambda = 2.0 * (n + 1.0);
  for (int k = 1; k <= k_max; ++k) {
    const double ratio = lp_norm(lu, 2.0 * k) / lp_norm(u, 2.0 * k);
    r.ratios.push_back(ratio);
    if (!r.first_k && ratio > r.lambda) r.first_k = k;
  }
  return r;
}

}  // namespace speclab
