#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mdscale/cmds.hpp"
#include "mdscale/error_decomposition.hpp"
#include "mdscale/linalg.hpp"

namespace mdscale {

// Nearest matrix whose principal block is negative semidefinite with rank at
// most r and whose coupling column and corner are free. c holds the block
// eigenvalues after projection plus the shifted corner scalar in its last
// entry; d_l is the reassembled matrix, generally not hollow.
struct KappaProjection {
  Eigen::VectorXd c;
  Eigen::MatrixXd d_l;
  double objective = 0.0;
  int active_count = 0;
};

namespace detail {

struct WaterFill {
  Eigen::VectorXd c;
  double objective = 0.0;
  int active_count = 0;
};

// Water-filling in the eigen coordinates of the principal block. Mass
// removed by the rank and sign constraints is spread uniformly over the
// surviving entries and the corner, folding entries that would turn positive
// back into the pool until every adjustment keeps its entry nonpositive.
inline WaterFill water_fill(const Eigen::VectorXd& lambda, double xi, int r) {
  const Eigen::Index n = lambda.size() + 1;
  if (r < 1 || r > n - 1)
    throw std::invalid_argument("project_onto_kappa: target dimension must satisfy 1 <= r <= n - 1");
  const double eps = epsilon_positive(lambda.norm());

  Eigen::VectorXd c(n);
  c.head(n - 1) = lambda;
  c(n - 1) = xi;

  double pool = 0.0;
  std::vector<Eigen::Index> active;
  active.reserve(static_cast<std::size_t>(n - 1));
  for (Eigen::Index i = 0; i < n - 1; ++i) {
    if (lambda(i) > eps || i >= r) {
      pool += c(i);
      c(i) = 0.0;
    } else {
      active.push_back(i);
    }
  }

  // The corner entry always shares in the redistribution, so the divisor
  // starts one above the active count and never reaches zero.
  Eigen::Index slots = static_cast<Eigen::Index>(active.size()) + 1;
  double share = pool / static_cast<double>(slots);
  // Entries are visited from least negative to most negative; once one
  // accepts the share without turning positive, every later one does too.
  for (auto it = active.rbegin(); it != active.rend(); ++it) {
    const Eigen::Index i = *it;
    if (c(i) + share <= 0.0) {
      c(i) += share;
      --slots;
      pool -= share;
    } else {
      pool += c(i);
      c(i) = 0.0;
      --slots;
      share = pool / static_cast<double>(slots);
    }
  }
  c(n - 1) += share;

  WaterFill out;
  out.objective = (c.head(n - 1) - lambda).squaredNorm() + (c(n - 1) - xi) * (c(n - 1) - xi);
  for (Eigen::Index i = 0; i < n - 1; ++i)
    if (c(i) != 0.0) ++out.active_count;
  out.c = std::move(c);
  return out;
}

// Input only needs to be symmetric; hollowness is a caller-level concern.
// The alternating-projection solver feeds non-hollow iterates through here.
inline KappaProjection project_symmetric_onto_kappa(const Eigen::MatrixXd& a, int r) {
  require_finite(a, "project_onto_kappa");
  require_symmetric(a, "project_onto_kappa");
  const Eigen::Index n = a.rows();
  if (n < 2) throw std::invalid_argument("project_onto_kappa: need n >= 2");

  const QDecomposition qd = q_decompose(a);
  const SpectralData spec = symmetric_eigen(qd.d_hat);
  WaterFill fill = water_fill(spec.eigenvalues, qd.xi, r);

  KappaProjection out;
  out.objective = fill.objective;
  out.active_count = fill.active_count;
  Eigen::MatrixXd d_hat_l =
      spec.eigenvectors * fill.c.head(n - 1).asDiagonal() * spec.eigenvectors.transpose();
  d_hat_l = 0.5 * (d_hat_l + d_hat_l.transpose()).eval();
  out.d_l = q_reassemble(QDecomposition{std::move(d_hat_l), qd.f, fill.c(n - 1)});
  out.c = std::move(fill.c);
  return out;
}

}  // namespace detail

inline KappaProjection project_onto_kappa(const Eigen::MatrixXd& d, int r) {
  detail::require_finite(d, "project_onto_kappa");
  detail::require_symmetric(d, "project_onto_kappa");
  detail::require_hollow(d, "project_onto_kappa");
  return detail::project_symmetric_onto_kappa(d, r);
}

inline KappaProjection project_onto_kappa(const SquaredDissimilarityMatrix& d, int r) {
  return detail::project_symmetric_onto_kappa(d.matrix(), r);
}

// Projection followed by classical scaling of the projected matrix. The
// scaling step discards the projected matrix's diagonal violation and yields
// a genuine rank-r squared EDM.
struct LowerCmdsResult {
  KappaProjection projection;
  CmdsResult scaled;
};

inline LowerCmdsResult lower_cmds(const Eigen::MatrixXd& d, int r) {
  KappaProjection proj = project_onto_kappa(d, r);
  CmdsResult scaled = cmds(proj.d_l, r);
  return LowerCmdsResult{std::move(proj), std::move(scaled)};
}

inline LowerCmdsResult lower_cmds(const SquaredDissimilarityMatrix& d, int r) {
  KappaProjection proj = project_onto_kappa(d, r);
  CmdsResult scaled = cmds(proj.d_l, r);
  return LowerCmdsResult{std::move(proj), std::move(scaled)};
}

// Closed-form floor on ||E - D||_F^2 over squared EDMs E of embedding
// dimension at most r. No projection or embedding is computed.
inline double lower_bound_value(const Eigen::MatrixXd& d, int r) {
  detail::require_finite(d, "lower_bound_value");
  detail::require_symmetric(d, "lower_bound_value");
  detail::require_hollow(d, "lower_bound_value");
  const QDecomposition qd = q_decompose(d);
  const MaskedSpectrum ms = masked_spectrum(symmetric_eigen(qd.d_hat), r);
  const double c1 = ms.lam_bold.squaredNorm();
  const double c2 = -ms.lam_bold.sum();
  return c1 + c2 * c2 / static_cast<double>(r + 1);
}

inline double lower_bound_value(const SquaredDissimilarityMatrix& d, int r) {
  return lower_bound_value(d.matrix(), r);
}

}  // namespace mdscale
