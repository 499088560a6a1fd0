#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace mdscale {

// Eigenvalues with magnitude at or below this threshold are treated as zero
// when deciding positivity. Scale is the Frobenius norm of the matrix the
// eigenvalues came from, so the threshold follows the data.
inline double epsilon_positive(double scale) {
  return 1e-9 * std::max(1.0, scale);
}

namespace detail {

inline std::atomic<std::uint64_t>& eigen_counter() {
  static std::atomic<std::uint64_t> count{0};
  return count;
}

inline void require_finite(const Eigen::MatrixXd& a, const char* who) {
  if (!a.allFinite())
    throw std::runtime_error(std::string(who) + ": matrix has non-finite entries");
}

// Relative asymmetry gate shared by everything that takes symmetric input.
// Round-off from file I/O passes, genuinely asymmetric data does not.
inline void require_symmetric(const Eigen::MatrixXd& a, const char* who,
                              double rel_tol = 1e-9) {
  if (a.rows() != a.cols())
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > rel_tol * scale)
    throw std::invalid_argument(std::string(who) + ": matrix is not symmetric (max asymmetry " +
                                std::to_string(asym) + ")");
}

}  // namespace detail

// Number of eigendecompositions performed so far in this process. Exposed so
// tests can assert that sweeps reuse spectral data instead of recomputing it.
inline std::uint64_t eigen_call_count() {
  return detail::eigen_counter().load(std::memory_order_relaxed);
}

// Reflector built from v = [1,...,1, 1+sqrt(n)]. Symmetric, orthogonal and an
// involution; conjugating by it maps the centered subspace onto the leading
// n-1 coordinates.
inline Eigen::MatrixXd householder_q(Eigen::Index n) {
  if (n < 2) throw std::invalid_argument("householder_q: need n >= 2");
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  v(n - 1) = 1.0 + std::sqrt(static_cast<double>(n));
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n, n);
  q.noalias() -= (2.0 / v.squaredNorm()) * v * v.transpose();
  return q;
}

inline Eigen::MatrixXd centering_v(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("centering_v: need n >= 1");
  const double inv = 1.0 / static_cast<double>(n);
  return Eigen::MatrixXd::Identity(n, n) -
         Eigen::MatrixXd::Constant(n, n, inv);
}

// Blocks of QDQ: the leading (n-1)x(n-1) principal block, the first n-1
// entries of the last column, and the bottom-right scalar.
struct QDecomposition {
  Eigen::MatrixXd d_hat;
  Eigen::VectorXd f;
  double xi = 0.0;
};

inline QDecomposition q_decompose(const Eigen::MatrixXd& d) {
  detail::require_finite(d, "q_decompose");
  detail::require_symmetric(d, "q_decompose");
  const Eigen::Index n = d.rows();
  if (n < 2) throw std::invalid_argument("q_decompose: need n >= 2");
  const Eigen::MatrixXd q = householder_q(n);
  Eigen::MatrixXd m = q * d * q;
  QDecomposition out;
  out.d_hat = m.topLeftCorner(n - 1, n - 1);
  out.d_hat = 0.5 * (out.d_hat + out.d_hat.transpose()).eval();
  out.f = m.topRightCorner(n - 1, 1);
  out.xi = m(n - 1, n - 1);
  return out;
}

inline Eigen::MatrixXd q_reassemble(const QDecomposition& qd) {
  const Eigen::Index k = qd.d_hat.rows();
  if (qd.d_hat.cols() != k || qd.f.size() != k)
    throw std::invalid_argument("q_reassemble: block dimensions disagree");
  const Eigen::Index n = k + 1;
  Eigen::MatrixXd m(n, n);
  m.topLeftCorner(k, k) = qd.d_hat;
  m.topRightCorner(k, 1) = qd.f;
  m.bottomLeftCorner(1, k) = qd.f.transpose();
  m(k, k) = qd.xi;
  const Eigen::MatrixXd q = householder_q(n);
  Eigen::MatrixXd out = q * m * q;
  return 0.5 * (out + out.transpose()).eval();
}

// Ascending eigenvalues with orthonormal eigenvectors. Column signs follow a
// fixed convention (largest-magnitude entry nonnegative, ties at the lowest
// index) so downstream results are reproducible run to run.
struct SpectralData {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

inline SpectralData symmetric_eigen(const Eigen::MatrixXd& a) {
  detail::require_finite(a, "symmetric_eigen");
  detail::require_symmetric(a, "symmetric_eigen", 1e-10);
  if (a.rows() < 1) throw std::invalid_argument("symmetric_eigen: empty matrix");
  detail::eigen_counter().fetch_add(1, std::memory_order_relaxed);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric_eigen: eigendecomposition failed");
  SpectralData out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index j = 0; j < out.eigenvectors.cols(); ++j) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < out.eigenvectors.rows(); ++i) {
      const double mag = std::abs(out.eigenvectors(i, j));
      if (mag > best) { best = mag; pivot = i; }
    }
    if (out.eigenvectors(pivot, j) < 0.0) out.eigenvectors.col(j) *= -1.0;
  }
  return out;
}

// Column j holds the coordinates of point j; the row count is the embedding
// dimension r.
struct Embedding {
  Eigen::MatrixXd coords;

  Eigen::Index dimension() const { return coords.rows(); }
  Eigen::Index point_count() const { return coords.cols(); }
};

// Symmetric hollow matrix of squared dissimilarities. Construction
// symmetrizes away round-off level asymmetry and rejects anything larger;
// negative entries are legal (perturbed metrics produce them) but counted so
// callers can surface a warning.
class SquaredDissimilarityMatrix {
 public:
  explicit SquaredDissimilarityMatrix(Eigen::MatrixXd entries) {
    detail::require_finite(entries, "SquaredDissimilarityMatrix");
    detail::require_symmetric(entries, "SquaredDissimilarityMatrix");
    if (entries.rows() < 2)
      throw std::invalid_argument("SquaredDissimilarityMatrix: need at least 2 points");
    entries = 0.5 * (entries + entries.transpose()).eval();
    const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
    const double diag_max = entries.diagonal().cwiseAbs().maxCoeff();
    if (diag_max > 1e-9 * scale)
      throw std::invalid_argument(
          "SquaredDissimilarityMatrix: diagonal is not zero (max |d_ii| = " +
          std::to_string(diag_max) + ")");
    entries.diagonal().setZero();
    entries_ = std::move(entries);
    min_entry_ = entries_.minCoeff();
    negative_count_ = (entries_.array() < 0.0).count();
  }

  Eigen::Index size() const { return entries_.rows(); }
  const Eigen::MatrixXd& matrix() const { return entries_; }

  // warning channel: nonzero when the input carried negative dissimilarities
  Eigen::Index negative_entry_count() const { return negative_count_; }
  double min_entry() const { return min_entry_; }

 private:
  Eigen::MatrixXd entries_;
  Eigen::Index negative_count_ = 0;
  double min_entry_ = 0.0;
};

// diag(G) 1^T - 2G + 1 diag(G)^T, the squared-distance matrix of any point
// set realizing the Gram matrix G.
inline SquaredDissimilarityMatrix gram_to_edm(const Eigen::MatrixXd& g) {
  detail::require_finite(g, "gram_to_edm");
  detail::require_symmetric(g, "gram_to_edm");
  const SpectralData spec = symmetric_eigen(g);
  const double min_eig = spec.eigenvalues(0);
  if (min_eig < -1e-6 * g.norm())
    throw std::domain_error("gram_to_edm: input is not positive semidefinite (min eigenvalue " +
                            std::to_string(min_eig) + ")");
  const Eigen::VectorXd dg = g.diagonal();
  const Eigen::Index n = g.rows();
  Eigen::MatrixXd d = dg.replicate(1, n) - 2.0 * g + dg.transpose().replicate(n, 1);
  d = d.cwiseMax(0.0).eval();
  d = 0.5 * (d + d.transpose()).eval();
  d.diagonal().setZero();
  return SquaredDissimilarityMatrix(std::move(d));
}

inline SquaredDissimilarityMatrix edm_of_embedding(const Embedding& x) {
  detail::require_finite(x.coords, "edm_of_embedding");
  const Eigen::Index n = x.point_count();
  if (n < 2) throw std::invalid_argument("edm_of_embedding: need at least 2 points");
  const Eigen::VectorXd sq = x.coords.colwise().squaredNorm();
  Eigen::MatrixXd d = sq.replicate(1, n) + sq.transpose().replicate(n, 1);
  d.noalias() -= 2.0 * x.coords.transpose() * x.coords;
  d = d.cwiseMax(0.0).eval();
  d = 0.5 * (d + d.transpose()).eval();
  d.diagonal().setZero();
  return SquaredDissimilarityMatrix(std::move(d));
}

// The unique (f, xi) completing a given principal block to a hollow matrix:
// [2f; xi] = sqrt(n) Q diag(Q blockdiag(d_hat, 0) Q).
inline std::pair<Eigen::VectorXd, double> hollow_completion(const Eigen::MatrixXd& d_hat) {
  detail::require_finite(d_hat, "hollow_completion");
  detail::require_symmetric(d_hat, "hollow_completion");
  const Eigen::Index n = d_hat.rows() + 1;
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(n, n);
  block.topLeftCorner(n - 1, n - 1) = d_hat;
  const Eigen::MatrixXd q = householder_q(n);
  const Eigen::VectorXd w =
      std::sqrt(static_cast<double>(n)) * (q * (q * block * q).diagonal());
  return {0.5 * w.head(n - 1), w(n - 1)};
}

}  // namespace mdscale
