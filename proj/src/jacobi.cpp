#include "speclab/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "speclab/errors.hpp"

namespace speclab {

JacobiResult jacobi_eigen(const Eigen::MatrixXd& input, bool want_vectors) {
  const int n = int(input.rows());
  if (input.cols() != n) throw PreconditionError("jacobi_eigen: matrix must be square");
  Eigen::MatrixXd a = input.selfadjointView<Eigen::Upper>();
  Eigen::MatrixXd v;
  if (want_vectors) v = Eigen::MatrixXd::Identity(n, n);
  const double norm = a.norm();
  JacobiResult out;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) off += a(i, j) * a(i, j);
    if (std::sqrt(2.0 * off) <= 1e-17 * norm || off == 0.0) break;
    out.sweeps = sweep + 1;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            const double vkp = v(k, p), vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
  out.values.resize(n);
  if (want_vectors) out.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]);
    if (want_vectors) out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

}  // namespace speclab
