#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "mdscale/linalg.hpp"

namespace mdscale {

// Output of classical scaling at a fixed target dimension r. The embedding
// always has exactly r rows; when fewer than r eigenvalues clear the
// positivity threshold the remaining rows are zero and kept_count records how
// many carried spectral mass.
struct CmdsResult {
  Embedding embedding;
  Eigen::MatrixXd gram;
  SquaredDissimilarityMatrix d_cmds;
  int kept_count = 0;
};

namespace detail {

// Assembles the rank-r classical scaling output from the spectrum of the
// doubly centered Gram matrix -VDV/2. Split out so sweeps can reuse one
// eigendecomposition across every r.
inline CmdsResult cmds_from_spectrum(const SpectralData& spec, int r) {
  const Eigen::Index n = spec.eigenvalues.size();
  // -VDV/2 and QDQ's principal block carry the same spectral mass, so the
  // positivity threshold is measured against ||VDV||_F = 2 ||-VDV/2||_F.
  const double eps = epsilon_positive(2.0 * spec.eigenvalues.norm());
  Embedding emb;
  emb.coords = Eigen::MatrixXd::Zero(r, n);
  int kept = 0;
  for (Eigen::Index j = n - 1; j >= 0 && kept < r; --j) {
    const double mu = spec.eigenvalues(j);
    if (mu <= eps) break;
    emb.coords.row(kept) = std::sqrt(mu) * spec.eigenvectors.col(j).transpose();
    ++kept;
  }
  Eigen::MatrixXd gram = emb.coords.transpose() * emb.coords;
  SquaredDissimilarityMatrix d_cmds = edm_of_embedding(emb);
  return CmdsResult{std::move(emb), std::move(gram), std::move(d_cmds), kept};
}

}  // namespace detail

inline CmdsResult cmds(const Eigen::MatrixXd& d, int r) {
  detail::require_finite(d, "cmds");
  detail::require_symmetric(d, "cmds");
  const Eigen::Index n = d.rows();
  if (n < 2) throw std::invalid_argument("cmds: need at least 2 points");
  if (r < 1 || r > n)
    throw std::invalid_argument("cmds: target dimension must satisfy 1 <= r <= n");
  const Eigen::MatrixXd v = centering_v(n);
  Eigen::MatrixXd x = -0.5 * (v * d * v);
  x = 0.5 * (x + x.transpose()).eval();
  return detail::cmds_from_spectrum(symmetric_eigen(x), r);
}

inline CmdsResult cmds(const SquaredDissimilarityMatrix& d, int r) {
  return cmds(d.matrix(), r);
}

// Squared Frobenius distance between the fitted Gram matrix and the doubly
// centered input, the quantity classical scaling minimizes over rank-r PSD
// matrices.
inline double strain_value(const Eigen::MatrixXd& d, const CmdsResult& result) {
  detail::require_symmetric(d, "strain_value");
  if (d.rows() != result.gram.rows())
    throw std::invalid_argument("strain_value: size mismatch between input and result");
  const Eigen::MatrixXd v = centering_v(d.rows());
  const Eigen::MatrixXd x = -0.5 * (v * d * v);
  return (result.gram - x).squaredNorm();
}

inline double strain_value(const SquaredDissimilarityMatrix& d, const CmdsResult& result) {
  return strain_value(d.matrix(), result);
}

}  // namespace mdscale
