#include "speclab/moser.hpp"

#include <cmath>
#include <numbers>

#include "speclab/constants.hpp"
#include "speclab/errors.hpp"

namespace speclab {
namespace {

constexpr long kMaxFactors = 1000000;

void check(double p, double x) {
  if (!std::isfinite(p) || !std::isfinite(x)) throw DomainError("xi: non-finite input");
  if (!(p > 2.0)) throw DomainError("xi: exponent must exceed 2");
  if (x < 0.0) throw DomainError("xi: x must be >= 0");
}

// log of the i-th factor: beta^{-i} log(1 + a_i x), a_i = beta^i / sqrt(2 beta^i - 1).
double log_factor(double log_beta, long i, double x) {
  const double li = i * log_beta;
  // a_i = exp(li) / sqrt(2 exp(li) - 1) = exp(li/2) / sqrt(2 - exp(-li))
  const double a = std::exp(0.5 * li) / std::sqrt(2.0 - std::exp(-li));
  return std::exp(-li) * std::log1p(a * x);
}

// Certified bound on sum_{i>=m} log of the factors.
double log_tail(double log_beta, long m, double x) {
  const double r = std::exp(-log_beta);  // 1/beta
  const double rh = std::exp(-0.5 * log_beta);
  // log(1+a x) <= a x <= beta^{i/2} x
  const double t1 = x * std::exp(-0.5 * m * log_beta) / (1.0 - rh);
  // log(1+a x) <= log(beta^{i/2}(1+x)) since a <= beta^{i/2} and beta^{i/2} >= 1
  const double geo = std::exp(-m * log_beta) / (1.0 - r);
  const double sum_i = std::exp(-m * log_beta) * (m / (1.0 - r) + r / ((1.0 - r) * (1.0 - r)));
  const double t2 = std::log1p(x) * geo + 0.5 * log_beta * sum_i;
  return std::min(t1, t2);
}

}  // namespace

double xi_upper_closed(double p, double x) {
  check(p, x);
  return std::exp(0.5 * p * x / (1.0 + x) + 0.5 * p * std::log1p(x));
}

double xi_upper_poly(double p, double x) {
  check(p, x);
  return std::exp(p * std::log1p(x));
}

double xi_upper_power(double p, double x) {
  check(p, x);
  if (x < 1.0) throw DomainError("xi_upper_power: requires x >= 1");
  return std::exp(0.25 * p * std::log(4.0 * std::numbers::e) + 0.5 * p * std::log(x));
}

XiEvaluation xi(double p, double x, double rel_tol) {
  check(p, x);
  if (!(rel_tol > 0.0 && rel_tol <= 1e-3)) throw DomainError("xi: rel_tol must lie in (0, 1e-3]");
  XiEvaluation e;
  e.x = x;
  e.p = p;
  e.upper_closed = xi_upper_closed(p, x);
  if (x == 0.0) {
    e.truncation_m = 0;
    return e;
  }
  const double log_beta = std::log(p / (p - 2.0));
  const double target = std::log1p(rel_tol);
  double log_value = 0.0;
  long m = 0;
  double tail = log_tail(log_beta, 0, x);
  while (tail >= target) {
    if (m >= kMaxFactors) throw ConvergenceError("xi: tolerance not reached within 1e6 factors");
    log_value += log_factor(log_beta, m, x);
    ++m;
    tail = log_tail(log_beta, m, x);
  }
  e.truncation_m = m;
  e.value = std::exp(log_value);
  e.tail_bound = std::exp(tail);
  return e;
}

std::vector<double> moser_partial_products(double p, double x, int m) {
  check(p, x);
  if (m < 1) throw DomainError("moser_partial_products: m must be >= 1");
  const double log_beta = std::log(p / (p - 2.0));
  std::vector<double> out;
  out.reserve(m);
  double s = 0.0;
  for (int i = 0; i < m; ++i) {
    s += log_factor(log_beta, i, x);
    out.push_back(std::exp(s));
  }
  return out;
}

double sup_bound_function(double p, double alpha, double D, double lambda) {
  if (!(lambda >= 0) || !(D > 0)) throw DomainError("sup_bound_function: bad lambda or D");
  const double b = b_alpha(p, alpha).b_alpha;
  return xi(p, b * D * std::sqrt(lambda)).value;
}

double sup_bound_oneform(double p, double alpha, double D, double lambda) {
  if (!(lambda >= 0) || !(D > 0)) throw DomainError("sup_bound_oneform: bad lambda or D");
  const double b = b_alpha(p, alpha).b_alpha;
  return xi(p, b * std::sqrt(lambda * D * D + (p - 1.0) * alpha * alpha)).value;
}

}  // namespace speclab
