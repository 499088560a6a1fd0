#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "mdscale/linalg.hpp"
#include "mdscale/lower.hpp"

namespace mdscale {

inline Eigen::MatrixXd project_hollow(const Eigen::MatrixXd& a) {
  detail::require_finite(a, "project_hollow");
  detail::require_symmetric(a, "project_hollow");
  Eigen::MatrixXd out = a;
  out.diagonal().setZero();
  return out;
}

struct SstressConfig {
  // Absolute stop threshold on the Frobenius change of the principal block
  // between consecutive hollow iterates.
  double tolerance = 0.1;
  int max_iterations = 10000;
  // With corrections the iterates converge to the metric projection onto the
  // intersection; without them to some point of it. Disabling is exposed for
  // comparison runs.
  bool use_dykstra_corrections = true;
};

struct SstressIterationRecord {
  int iteration = 0;
  double objective = 0.0;
  double d_hat_change = 0.0;
};

using SstressCallback = std::function<void(const SstressIterationRecord&)>;

// d_t is the last hollow iterate. Non-convergence within the iteration cap
// is reported through the flag, not an exception; the iterate is still the
// best available and remains usable.
struct SstressResult {
  Eigen::MatrixXd d_t;
  int iterations = 0;
  bool converged = false;
  double objective = 0.0;
  std::vector<SstressIterationRecord> history;
};

namespace detail {

inline SstressResult solve_sstress_impl(const Eigen::MatrixXd& d, int r,
                                        const SstressConfig& cfg,
                                        const SstressCallback& callback) {
  const Eigen::Index n = d.rows();
  if (r < 1 || r > n - 1)
    throw std::invalid_argument("solve_sstress: target dimension must satisfy 1 <= r <= n - 1");
  if (cfg.tolerance <= 0.0)
    throw std::invalid_argument("solve_sstress: tolerance must be positive");
  if (cfg.max_iterations < 1)
    throw std::invalid_argument("solve_sstress: max_iterations must be at least 1");

  Eigen::MatrixXd x = d;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd prev_hat = q_decompose(x).d_hat;

  SstressResult out;
  out.history.reserve(static_cast<std::size_t>(std::min(cfg.max_iterations, 4096)));
  for (int k = 1; k <= cfg.max_iterations; ++k) {
    const Eigen::MatrixXd y = project_symmetric_onto_kappa(x + p, r).d_l;
    if (cfg.use_dykstra_corrections) p = x + p - y;
    x = project_hollow(y + q);
    if (cfg.use_dykstra_corrections) q = y + q - x;

    const QDecomposition qd = q_decompose(x);
    SstressIterationRecord rec;
    rec.iteration = k;
    rec.objective = (x - d).squaredNorm();
    rec.d_hat_change = (qd.d_hat - prev_hat).norm();
    prev_hat = qd.d_hat;
    out.history.push_back(rec);
    if (callback) callback(rec);
    out.iterations = k;
    if (rec.d_hat_change <= cfg.tolerance) {
      out.converged = true;
      break;
    }
  }
  out.d_t = std::move(x);
  out.objective = (out.d_t - d).squaredNorm();
  return out;
}

}  // namespace detail

inline SstressResult solve_sstress(const SquaredDissimilarityMatrix& d, int r,
                                   const SstressConfig& cfg = {},
                                   const SstressCallback& callback = nullptr) {
  return detail::solve_sstress_impl(d.matrix(), r, cfg, callback);
}

inline SstressResult solve_sstress(const Eigen::MatrixXd& d, int r,
                                   const SstressConfig& cfg = {},
                                   const SstressCallback& callback = nullptr) {
  detail::require_finite(d, "solve_sstress");
  detail::require_symmetric(d, "solve_sstress");
  detail::require_hollow(d, "solve_sstress");
  return detail::solve_sstress_impl(d, r, cfg, callback);
}

}  // namespace mdscale
