#include "speclab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "speclab/errors.hpp"
#include "speclab/quadrature.hpp"

namespace speclab {
namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + ": non-finite input");
}

void check_p_alpha(double p, double alpha, const char* what) {
  require_finite(p, what);
  require_finite(alpha, what);
  if (!(p > 2.0)) throw DomainError(std::string(what) + ": exponent must exceed 2");
  if (alpha < 0.0) throw DomainError(std::string(what) + ": alpha must be >= 0");
}

double integral_rel_tol(double quad_tol) { return std::max(0.1 * quad_tol, 1e-14); }

}  // namespace

void validate(const BoundInputs& in) {
  if (in.n < 2) throw PreconditionError("n must be >= 2");
  for (double v : {in.D, in.i0, in.kappa, in.epsilon, in.vol_y, in.vol_x, in.epsilon0, in.p})
    if (!std::isfinite(v)) throw PreconditionError("non-finite bound input");
  if (!(in.D > 0 && in.i0 > 0 && in.vol_y > 0 && in.vol_x > 0 && in.epsilon0 > 0))
    throw PreconditionError("D, i0, volumes and epsilon0 must be positive");
  if (in.kappa < 0 || in.epsilon < 0) throw PreconditionError("kappa and epsilon must be >= 0");
  if (in.n == 2 && !(in.p > 2)) throw PreconditionError("Sobolev exponent must exceed 2");
}

double sobolev_exponent(const BoundInputs& in) { return in.n == 2 ? in.p : double(in.n); }

ValueWithError h_alpha_detail(double p, double alpha, double quad_tol) {
  check_p_alpha(p, alpha, "h_alpha");
  if (alpha == 0.0) return {2.0, 0.0};
  auto q = integrate([p](double t) { return std::pow(std::cosh(t), p - 1.0); }, 0.0, 0.5 * alpha,
                     0.0, integral_rel_tol(quad_tol));
  return {alpha / q.value, alpha * q.error / (q.value * q.value)};
}

ValueWithError gamma_alpha_detail(double p, double alpha, double quad_tol) {
  check_p_alpha(p, alpha, "gamma_alpha");
  if (alpha == 0.0) {
    const double v = std::pow(std::pow(0.5 + 1.0 / p, p) - std::pow(2.0, -p), -1.0 / p);
    return {v, 0.0};
  }
  const auto h = h_alpha_detail(p, alpha, quad_tol);
  const double c = alpha / h.value;
  auto q = integrate(
      [p, c](double t) { return std::pow(c * std::cosh(t) + std::sinh(t) / p, p - 1.0); }, 0.0,
      alpha, 0.0, integral_rel_tol(quad_tol));
  // The integrand is increasing in c with d/dc <= (p-1)/c times itself, and dc/c = dH/H.
  const double err_int = q.error + (p - 1.0) * q.value * h.error / h.value;
  const double value = alpha * std::pow(q.value, -1.0 / p);
  const double err = (alpha / p) * std::pow(q.value, -1.0 / p - 1.0) * err_int;
  return {value, err};
}

double h_alpha(double p, double alpha) { return h_alpha_detail(p, alpha).value; }
double gamma_alpha(double p, double alpha) { return gamma_alpha_detail(p, alpha).value; }

SobolevConstants b_alpha(double p, double alpha, double quad_tol) {
  const auto h = h_alpha_detail(p, alpha, quad_tol);
  const auto g = gamma_alpha_detail(p, alpha, quad_tol);
  SobolevConstants s;
  s.alpha = alpha;
  s.h_alpha = h.value;
  s.gamma_alpha = g.value;
  const double k = 2.0 * (p - 1.0) / (p - 2.0);
  s.b_alpha = k / g.value + 2.0 / h.value;
  s.quad_error.h = h.error;
  s.quad_error.gamma = g.error;
  s.quad_error.b = k * g.error / (g.value * g.value) + 2.0 * h.error / (h.value * h.value);
  return s;
}

EpsilonOne epsilon_one(const BoundInputs& in) {
  validate(in);
  if (in.kappa == 0.0) return {in.epsilon0, true};
  const double n = in.n;
  const double base = (std::pow(10.0 / 9.0, 2.0 / n) - 1.0) / (20.0 * (n + 1.0));
  return {std::min(in.epsilon0, std::pow(base, 4) / in.kappa), false};
}

double eta_of_epsilon(int n, double kappa, double epsilon) {
  require_finite(kappa, "eta_of_epsilon");
  require_finite(epsilon, "eta_of_epsilon");
  if (n < 2 || kappa < 0 || epsilon < 0) throw DomainError("eta_of_epsilon: bad domain");
  const double t = std::pow(kappa * epsilon, 0.25);
  return std::pow(1.0 + 20.0 * (n + 1.0) * t, 0.5 * n) - 1.0;
}

double c1(int n) { return 14.0 * (n - 1.0) * std::sqrt(n + 1.0); }

double c2(int n, double p, double alpha, double Lambda, double quad_tol) {
  if (!(Lambda >= 0)) throw DomainError("c2: Lambda must be >= 0");
  const double b = b_alpha(p, alpha, quad_tol).b_alpha;
  const double inner = 1.0 + b * std::sqrt(Lambda + (n - 1.0) * alpha * alpha);
  return 4.0 * (n + 1.0) * ((2.0 * n + 1.0) * std::exp(double(n)) * std::pow(inner, n) + 2.0);
}

ComparisonFactor theorem_bound(const BoundInputs& in, double lambda_x, double quad_tol) {
  validate(in);
  if (!(lambda_x >= 0)) throw PreconditionError("lambda_x must be >= 0");
  const double p = sobolev_exponent(in);
  const double alpha = in.kappa * in.D;
  const double ke = in.kappa * in.epsilon;
  ComparisonFactor f;
  f.c1 = c1(in.n);
  f.c2 = c2(in.n, p, alpha, in.D * in.D * lambda_x, quad_tol);
  f.eta = eta_of_epsilon(in.n, in.kappa, in.epsilon);
  f.multiplier = (1.0 + f.c1 * std::pow(ke, 1.0 / 16.0)) * (1.0 + f.c2 * std::pow(ke, 1.0 / 8.0));
  const auto e1 = epsilon_one(in);
  f.epsilon_one = e1.value;
  f.epsilon_one_degenerate = e1.degenerate;
  const double shrink = 1.0 - 10.0 * in.n * (in.n + 1.0) * std::pow(ke, 0.25);
  f.feasible = in.epsilon < e1.value && shrink * in.vol_y < in.vol_x;
  return f;
}

double prop13_bound(int n, double p, double alpha, double D, double eta, double lambda_x) {
  if (!(eta > 0.0 && eta <= 1.0 / 9.0)) throw PreconditionError("prop13_bound: eta must lie in (0, 1/9]");
  if (!(lambda_x >= 0) || !(D > 0)) throw PreconditionError("prop13_bound: bad lambda or D");
  const double b = b_alpha(p, alpha).b_alpha;
  const double c = (2.0 * n + 1.0) * std::exp(double(n)) *
                       std::pow(1.0 + b * std::sqrt(lambda_x * D * D + (n - 1.0) * alpha * alpha), n) +
                   2.0;
  return (1.0 + 7.0 * (n - 1.0) * std::pow(eta, 0.25)) * (1.0 + c * std::sqrt(eta)) * lambda_x;
}

double unit_ball_volume(int n) {
  return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double weyl_estimate(int n, double volume, double k) {
  if (!(volume > 0) || !(k >= 1)) throw PreconditionError("weyl_estimate: volume > 0, k >= 1");
  const double two_pi = 2.0 * std::numbers::pi;
  return two_pi * two_pi / std::pow(unit_ball_volume(n) * volume, 2.0 / n) * std::pow(k, 2.0 / n);
}

double upper_shell(double c_const, double volume, int n, double k) {
  return c_const / std::pow(volume, 2.0 / n) * std::pow(k, 2.0 / n);
}

double lower_shell(double gamma_const, double diameter, int n, double k) {
  return gamma_const / (diameter * diameter) * std::pow(k, 2.0 / n);
}

nlohmann::json bounds_report(const BoundInputs& in, double lambda_x, double quad_tol) {
  validate(in);
  const double p = sobolev_exponent(in);
  const auto s = b_alpha(p, in.kappa * in.D, quad_tol);
  const auto f = theorem_bound(in, lambda_x, quad_tol);
  nlohmann::json j;
  j["inputs"] = {{"n", in.n},         {"D", in.D},         {"i0", in.i0},
                 {"kappa", in.kappa}, {"epsilon", in.epsilon}, {"vol_y", in.vol_y},
                 {"vol_x", in.vol_x}, {"epsilon0", in.epsilon0}, {"p", p},
                 {"lambda", lambda_x}};
  j["constants"] = {{"alpha", s.alpha},
                    {"H", s.h_alpha},
                    {"Gamma", s.gamma_alpha},
                    {"B", s.b_alpha},
                    {"quad_error", {{"H", s.quad_error.h}, {"Gamma", s.quad_error.gamma}, {"B", s.quad_error.b}}}};
  j["factor"] = {{"c1", f.c1},
                 {"c2", f.c2},
                 {"eta", f.eta},
                 {"multiplier", f.multiplier},
                 {"feasible", f.feasible},
                 {"epsilon_one", f.epsilon_one},
                 {"epsilon_one_degenerate", f.epsilon_one_degenerate}};
  return j;
}

}  // namespace speclab
