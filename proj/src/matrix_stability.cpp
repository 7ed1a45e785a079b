#include "speclab/matrix_stability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "speclab/errors.hpp"
#include "speclab/jacobi.hpp"

namespace speclab {

SymMatrix::SymMatrix(Eigen::MatrixXd entries) : a_(std::move(entries)) {
  if (a_.rows() != a_.cols() || a_.rows() == 0) throw PreconditionError("SymMatrix: must be square");
  if (!a_.allFinite()) throw PreconditionError("SymMatrix: non-finite entry");
  const double scale = std::max(1.0, a_.cwiseAbs().maxCoeff());
  if ((a_ - a_.transpose()).cwiseAbs().maxCoeff() > 1e-14 * scale)
    throw PreconditionError("SymMatrix: not symmetric");
}

std::vector<double> sym_eigenvalues(const SymMatrix& a) {
  const auto r = jacobi_eigen(a.entries(), false);
  return {r.values.data(), r.values.data() + r.values.size()};
}

namespace {

struct Spectral {
  std::vector<double> eig;
  double det = 1.0;
  double trace = 0.0;
};

Spectral spectral(const SymMatrix& a) {
  Spectral s;
  s.eig = sym_eigenvalues(a);
  for (double e : s.eig) s.det *= e;
  s.trace = a.entries().trace();
  return s;
}

bool gm_preconditions(const Spectral& s, int n, double eta) {
  if (s.eig.front() < 0.0) return false;
  const double r = std::sqrt(eta);
  return s.det >= (1.0 - r) * (1.0 - r) && s.trace <= n * std::pow(1.0 + eta, 2.0 / n);
}

}  // namespace

std::optional<double> prop_a1_residual(const SymMatrix& a, double eta) {
  if (!(eta > 0.0 && eta <= 0.25)) return std::nullopt;
  const int n = a.n();
  const auto s = spectral(a);
  if (!gm_preconditions(s, n, eta)) return std::nullopt;
  const double r = std::sqrt(eta);
  const double bound = 4.0 * (n - 1.0) * (n - 1.0) * r * (1.0 + (n + 10.0) / n * r);
  const double dev = (a.entries() - Eigen::MatrixXd::Identity(n, n)).squaredNorm();
  return bound - dev;
}

std::pair<double, double> lemma_a2_residuals(const std::vector<double>& x) {
  const int n = int(x.size());
  if (n < 2) throw PreconditionError("lemma_a2_residuals: need at least two entries");
  if (!std::is_sorted(x.begin(), x.end())) throw PreconditionError("lemma_a2_residuals: entries must be sorted");
  if (!(x.front() > -1.0)) throw PreconditionError("lemma_a2_residuals: smallest entry must exceed -1");
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (std::abs(sum) > 1e-12) throw PreconditionError("lemma_a2_residuals: entries must sum to zero");
  double prod = 1.0, sq = 0.0;
  for (double v : x) {
    prod *= 1.0 + v;
    sq += v * v;
  }
  const double mid = 1.0 - n / (2.0 * (n - 1.0)) * x.front() * x.front();
  const double right = 1.0 - sq / (2.0 * (n - 1.0) * (n - 1.0));
  return {mid - prod, right - mid};
}

std::optional<double> lemma_a3_residual(const SymMatrix& a, double eta_prime) {
  if (!(eta_prime > 0.0 && eta_prime < 1.0)) return std::nullopt;
  const int n = a.n();
  const auto s = spectral(a);
  if (s.eig.front() < 0.0) return std::nullopt;
  const double mean = s.trace / n;
  if (!(mean > 0.0) || s.det / std::pow(mean, n) < 1.0 - eta_prime) return std::nullopt;
  const double dev = (a.entries() - mean * Eigen::MatrixXd::Identity(n, n)).squaredNorm();
  return 2.0 * (n - 1.0) * (n - 1.0) * eta_prime * mean * mean - dev;
}

std::optional<bool> quasi_isometry_check(const SymMatrix& a, double eta) {
  if (!(eta > 0.0 && eta <= 0.25)) return std::nullopt;
  const int n = a.n();
  const auto s = spectral(a);
  if (!gm_preconditions(s, n, eta)) return std::nullopt;
  const double w = 5.0 * (n - 1.0) * std::pow(eta, 0.25);
  return s.eig.front() >= 1.0 - w && s.eig.back() <= 1.0 + w;
}

Eigen::MatrixXd random_orthogonal(int n, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n, n);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = g(rng);
    const double nv = v.norm();
    if (nv == 0.0) continue;
    v /= nv;
    q -= 2.0 * (q * v) * v.transpose();
  }
  return q;
}

namespace {

double log_uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

Eigen::MatrixXd conjugate(const std::vector<double>& mu, Rng& rng) {
  const int n = int(mu.size());
  const Eigen::MatrixXd q = random_orthogonal(n, rng);
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d(i) = mu[i];
  Eigen::MatrixXd a = q * d.asDiagonal() * q.transpose();
  return 0.5 * (a + a.transpose());
}

// Eigenvalues near 1 with spread comparable to eta^(1/4); a third of the
// samples are pushed onto the trace boundary and a third onto the det boundary.
std::vector<double> near_identity_spectrum(int n, double eta, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), u01(0.0, 1.0);
  const double sigma = 3.0 * u01(rng) * std::pow(eta, 0.25);
  std::vector<double> mu(n);
  for (auto& m : mu) m = std::exp(sigma * u(rng));
  const double mode = u01(rng);
  if (mode < 1.0 / 3.0) {
    const double tr = std::accumulate(mu.begin(), mu.end(), 0.0);
    const double c = n * std::pow(1.0 + eta, 2.0 / n) / tr;
    for (auto& m : mu) m *= c;
  } else if (mode < 2.0 / 3.0) {
    double det = 1.0;
    for (double m : mu) det *= m;
    const double r = std::sqrt(eta);
    const double c = std::pow((1.0 - r) * (1.0 - r) / det, 1.0 / n);
    for (auto& m : mu) m *= c * (1.0 + 1e-15);
  }
  return mu;
}

void record(SuiteResult& r, double residual, double slack, const Eigen::MatrixXd& a, double param) {
  if (residual < -slack) ++r.violations;
  if (r.accepted == 0 || residual < r.worst_residual) {
    r.worst_residual = residual;
    r.worst_sample.assign(a.data(), a.data() + a.size());
    r.worst_parameter = param;
  }
  ++r.accepted;
}

}  // namespace

SuiteResult run_stability_suite(const std::string& suite, int n, long accepted_target,
                                std::uint64_t seed, double slack) {
  if (n < 2 || n > 16) throw PreconditionError("run_stability_suite: n must lie in [2, 16]");
  SuiteResult r;
  r.suite = suite;
  r.n = n;
  Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * std::uint64_t(n)));
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const long max_draws = 50 * accepted_target + 1000;
  long draws = 0;
  while (r.accepted < accepted_target && draws++ < max_draws) {
    if (suite == "lemma-a2") {
      std::normal_distribution<double> g;
      std::vector<double> x(n);
      if (u01(rng) < 0.2) {
        // Extremal configuration: one negative entry, the rest equal.
        const double a = u01(rng);
        x[0] = -a;
        for (int i = 1; i < n; ++i) x[i] = a / (n - 1);
      } else {
        for (auto& v : x) v = g(rng);
        const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
        for (auto& v : x) v -= mean;
        const double lo = *std::min_element(x.begin(), x.end());
        if (lo == 0.0) {
          ++r.rejected;
          continue;
        }
        const double target = -std::pow(u01(rng), 0.25) * 0.999999;
        for (auto& v : x) v *= target / lo;
      }
      std::sort(x.begin(), x.end());
      const double sum = std::accumulate(x.begin(), x.end(), 0.0);
      x.back() -= sum;
      if (!std::is_sorted(x.begin(), x.end()) || !(x.front() > -1.0)) {
        ++r.rejected;
        continue;
      }
      const auto [first, second] = lemma_a2_residuals(x);
      Eigen::MatrixXd sample = Eigen::Map<Eigen::VectorXd>(x.data(), n);
      record(r, std::min(first, second), slack, sample, 0.0);
      continue;
    }
    if (suite == "lemma-a3") {
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      const double sigma = log_uniform(rng, 1e-4, 2.0);
      const double scale = log_uniform(rng, 0.25, 4.0);
      std::vector<double> mu(n);
      for (auto& m : mu) m = scale * std::exp(sigma * u(rng));
      const SymMatrix a(conjugate(mu, rng));
      const auto ev = sym_eigenvalues(a);
      double det = 1.0;
      for (double e : ev) det *= e;
      const double mean = a.entries().trace() / n;
      const double tight = 1.0 - det / std::pow(mean, n);
      double eta_prime = u01(rng) < 0.5 ? tight : tight + u01(rng) * (1.0 - tight);
      eta_prime = std::max(eta_prime, 1e-300);
      const auto res = lemma_a3_residual(a, eta_prime);
      if (!res) {
        ++r.rejected;
        continue;
      }
      record(r, *res, slack, a.entries(), eta_prime);
      continue;
    }
    if (suite != "prop-a1" && suite != "quasi-isometry")
      throw PreconditionError("run_stability_suite: unknown suite " + suite);
    const double eta = log_uniform(rng, 1e-8, 0.25);
    const SymMatrix a(conjugate(near_identity_spectrum(n, eta, rng), rng));
    if (suite == "prop-a1") {
      const auto res = prop_a1_residual(a, eta);
      if (!res) {
        ++r.rejected;
        continue;
      }
      record(r, *res, slack, a.entries(), eta);
    } else {
      const auto ok = quasi_isometry_check(a, eta);
      if (!ok) {
        ++r.rejected;
        continue;
      }
      // Residual: distance from the spectrum to the edge of the allowed band.
      const auto ev = sym_eigenvalues(a);
      const double w = 5.0 * (n - 1.0) * std::pow(eta, 0.25);
      const double res = std::min(ev.front() - (1.0 - w), (1.0 + w) - ev.back());
      record(r, res, slack, a.entries(), eta);
    }
  }
  return r;
}

nlohmann::json suite_to_json(const SuiteResult& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["n"] = r.n;
  j["accepted"] = r.accepted;
  j["rejected"] = r.rejected;
  j["violations"] = r.violations;
  j["worst_residual"] = r.worst_residual;
  if (r.violations > 0) {
    j["failing_sample"] = r.worst_sample;
    j["failing_parameter"] = r.worst_parameter;
  }
  return j;
}

}  // namespace speclab
