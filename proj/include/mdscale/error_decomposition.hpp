#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "mdscale/linalg.hpp"

namespace mdscale {

namespace detail {

inline void require_hollow(const Eigen::MatrixXd& d, const char* who) {
  const double scale = std::max(1.0, d.cwiseAbs().maxCoeff());
  const double diag_max = d.diagonal().cwiseAbs().maxCoeff();
  if (diag_max > 1e-9 * scale)
    throw std::domain_error(std::string(who) + ": input diagonal is not zero (max |d_ii| = " +
                            std::to_string(diag_max) + ")");
}

}  // namespace detail

// Spectrum of the principal block with the entries a rank-r negative
// semidefinite truncation would keep zeroed out. What remains, stored in
// lam_bold, is exactly the spectral mass such a truncation discards. The
// vector has one trailing zero appended so it lives in the n-dimensional
// coordinate system that includes the corner scalar.
struct MaskedSpectrum {
  Eigen::VectorXd lam_bold;
  int r = 0;
  SpectralData source;
};

inline MaskedSpectrum masked_spectrum(const SpectralData& spec, int r) {
  const Eigen::Index m = spec.eigenvalues.size();
  const Eigen::Index n = m + 1;
  if (r < 1 || r > n)
    throw std::invalid_argument("masked_spectrum: target dimension must satisfy 1 <= r <= n");
  const double eps = epsilon_positive(spec.eigenvalues.norm());
  MaskedSpectrum out;
  out.r = r;
  out.source = spec;
  out.lam_bold = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double lam = spec.eigenvalues(i);
    // kept entries are those a rank-r NSD truncation throws away: anything
    // past the r most negative directions, plus every positive eigenvalue
    if (lam > eps || i >= r) out.lam_bold(i) = lam;
  }
  return out;
}

// Orthogonal change of basis aligning the first n-1 coordinates with the
// eigenvectors of the principal block and the last with the corner scalar.
inline Eigen::MatrixXd build_s(const SpectralData& spec, Eigen::Index n) {
  if (spec.eigenvalues.size() != n - 1)
    throw std::invalid_argument("build_s: spectrum size must be n - 1");
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(n, n);
  block.topLeftCorner(n - 1, n - 1) = spec.eigenvectors;
  block(n - 1, n - 1) = 1.0;
  return householder_q(n) * block;
}

// Closed-form split of the squared embedding error at dimension r:
//   c1        error inside the principal block
//   c2^2      error in the corner scalar (c2 is the exact corner shift)
//   c3        error in the off-diagonal coupling column
// total predicts ||EDM(embedding) - D||_F^2 without computing the embedding;
// lower_bound is the value no rank-r squared EDM can beat.
struct ErrorDecomposition {
  int r = 0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double total = 0.0;
  double lower_bound = 0.0;
};

namespace detail {

inline ErrorDecomposition decompose_from_spectrum(const MaskedSpectrum& ms,
                                                  const Eigen::MatrixXd& s_hadamard) {
  const Eigen::Index n = ms.lam_bold.size();
  ErrorDecomposition out;
  out.r = ms.r;
  out.c1 = ms.lam_bold.squaredNorm();
  out.c2 = -ms.lam_bold.sum();
  const double coupling = static_cast<double>(n) * (s_hadamard * ms.lam_bold).squaredNorm();
  out.c3 = 0.5 * (coupling - out.c2 * out.c2);
  out.total = out.c1 + out.c2 * out.c2 + out.c3;
  out.lower_bound = out.c1 + out.c2 * out.c2 / static_cast<double>(ms.r + 1);
  return out;
}

}  // namespace detail

inline ErrorDecomposition decompose_error(const Eigen::MatrixXd& d, int r) {
  detail::require_finite(d, "decompose_error");
  detail::require_symmetric(d, "decompose_error");
  detail::require_hollow(d, "decompose_error");
  const QDecomposition qd = q_decompose(d);
  const SpectralData spec = symmetric_eigen(qd.d_hat);
  const MaskedSpectrum ms = masked_spectrum(spec, r);
  const Eigen::MatrixXd s = build_s(spec, d.rows());
  return detail::decompose_from_spectrum(ms, s.cwiseProduct(s));
}

inline ErrorDecomposition decompose_error(const SquaredDissimilarityMatrix& d, int r) {
  return decompose_error(d.matrix(), r);
}

// One eigendecomposition serves the whole dimension range; only the cheap
// masking and inner products are redone per r.
inline std::vector<ErrorDecomposition> sweep(const Eigen::MatrixXd& d, int r_min, int r_max) {
  detail::require_finite(d, "sweep");
  detail::require_symmetric(d, "sweep");
  detail::require_hollow(d, "sweep");
  const Eigen::Index n = d.rows();
  if (r_min < 1 || r_min > r_max || r_max > n)
    throw std::invalid_argument("sweep: need 1 <= r_min <= r_max <= n");
  const QDecomposition qd = q_decompose(d);
  const SpectralData spec = symmetric_eigen(qd.d_hat);
  const Eigen::MatrixXd s = build_s(spec, n);
  const Eigen::MatrixXd s_hadamard = s.cwiseProduct(s);
  std::vector<ErrorDecomposition> out;
  out.reserve(static_cast<std::size_t>(r_max - r_min + 1));
  for (int r = r_min; r <= r_max; ++r)
    out.push_back(detail::decompose_from_spectrum(masked_spectrum(spec, r), s_hadamard));
  return out;
}

inline std::vector<ErrorDecomposition> sweep(const SquaredDissimilarityMatrix& d,
                                             int r_min, int r_max) {
  return sweep(d.matrix(), r_min, r_max);
}

// Predicted and directly measured size of the coupling-column error after
// redistribution. The prediction bounds the measurement from above; the pair
// is exposed so callers can check the slack.
struct C4Quantity {
  double formula = 0.0;
  double measured = 0.0;
};

namespace detail {

inline C4Quantity c4_from_parts(const QDecomposition& qd, const SpectralData& spec,
                                const Eigen::MatrixXd& s_hadamard, const MaskedSpectrum& ms,
                                const Eigen::VectorXd& c) {
  const Eigen::Index n = ms.lam_bold.size();
  C4Quantity out;
  const double c2 = -ms.lam_bold.sum();
  const double coupling = static_cast<double>(n) * (s_hadamard * ms.lam_bold).squaredNorm();
  out.formula = 0.5 * (coupling - c2 * c2 / static_cast<double>(ms.r + 1));
  // The projected matrix keeps the original coupling column; the embedding
  // step replaces it with the hollow completion of the projected block.
  const Eigen::MatrixXd d_hat_l =
      spec.eigenvectors *
      c.head(n - 1).asDiagonal() *
      spec.eigenvectors.transpose();
  const Eigen::VectorXd f_l = hollow_completion(0.5 * (d_hat_l + d_hat_l.transpose())).first;
  out.measured = 2.0 * (qd.f - f_l).squaredNorm();
  return out;
}

}  // namespace detail

inline C4Quantity c4_quantity(const Eigen::MatrixXd& d, int r, const Eigen::VectorXd& c) {
  detail::require_finite(d, "c4_quantity");
  detail::require_symmetric(d, "c4_quantity");
  detail::require_hollow(d, "c4_quantity");
  if (c.size() != d.rows())
    throw std::invalid_argument("c4_quantity: coefficient vector must have length n");
  const QDecomposition qd = q_decompose(d);
  const SpectralData spec = symmetric_eigen(qd.d_hat);
  const MaskedSpectrum ms = masked_spectrum(spec, r);
  const Eigen::MatrixXd s = build_s(spec, d.rows());
  return detail::c4_from_parts(qd, spec, s.cwiseProduct(s), ms, c);
}

}  // namespace mdscale
