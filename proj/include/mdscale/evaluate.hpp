#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mdscale/cmds.hpp"
#include "mdscale/error_decomposition.hpp"
#include "mdscale/io.hpp"
#include "mdscale/linalg.hpp"
#include "mdscale/lower.hpp"
#include "mdscale/sstress.hpp"

namespace mdscale {

// Fixture sizes for full-scale evaluation runs. Nearest-neighbor benchmarks
// use 2000 points split evenly; anything that runs the iterative solver per
// dimension stays at 500 points or below.
inline constexpr int kNnEvalPointCount = 2000;
inline constexpr int kNnEvalTrainCount = 1000;
inline constexpr int kSstressEvalPointCap = 500;

enum class Method { cmds, lower_cmds, sstress, lower_bound };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::cmds: return "cmds";
    case Method::lower_cmds: return "lower_cmds";
    case Method::sstress: return "sstress";
    case Method::lower_bound: return "lower_bound";
  }
  return "unknown";
}

// Accepts both underscore and hyphen spellings, so CLI tokens map directly.
inline std::optional<Method> method_from_name(std::string_view name) {
  std::string canon(name);
  for (char& ch : canon)
    if (ch == '-') ch = '_';
  if (canon == "cmds") return Method::cmds;
  if (canon == "lower_cmds") return Method::lower_cmds;
  if (canon == "sstress") return Method::sstress;
  if (canon == "lower_bound") return Method::lower_bound;
  return std::nullopt;
}

inline double relative_error(const Eigen::MatrixXd& d_ref, const Eigen::MatrixXd& d_other) {
  if (d_ref.rows() != d_other.rows() || d_ref.cols() != d_other.cols())
    throw std::invalid_argument("relative_error: shape mismatch");
  const double ref = d_ref.squaredNorm();
  if (ref == 0.0) throw std::invalid_argument("relative_error: reference matrix is zero");
  return (d_ref - d_other).squaredNorm() / ref;
}

struct SweepRow {
  Method method = Method::cmds;
  int r = 0;
  double objective = 0.0;
  double rel_err_input = 0.0;
  // Present when the sweep was handed the clean matrix the input was derived
  // from. Bound rows never carry it: they certify a floor, they do not
  // reconstruct anything comparable to the original.
  std::optional<double> rel_err_original;
  double wall_ms = 0.0;
};

struct SweepReport {
  std::vector<SweepRow> rows;

  std::string to_csv() const {
    std::string out = "method,r,objective,rel_err_input,rel_err_original,wall_ms\n";
    for (const SweepRow& row : rows) {
      out += method_name(row.method);
      out += ',' + std::to_string(row.r);
      out += ',' + detail::format_g17(row.objective);
      out += ',' + detail::format_g17(row.rel_err_input);
      out += ',';
      if (row.rel_err_original) out += detail::format_g17(*row.rel_err_original);
      out += ',' + detail::format_g17(row.wall_ms);
      out += '\n';
    }
    return out;
  }
};

struct SweepConfig {
  // Instances larger than this skip the iterative solver rows entirely.
  Eigen::Index sstress_point_cap = kSstressEvalPointCap;
  SstressConfig sstress;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// Embedding of the projected matrix assembled straight from the water-fill
// coefficients. Equivalent to running classical scaling on the assembled
// projection; shares one eigendecomposition across a whole dimension range.
inline CmdsResult lower_cmds_from_waterfill(const Eigen::VectorXd& c, const Eigen::MatrixXd& s,
                                            int r) {
  const Eigen::Index n = s.rows();
  const double eps = epsilon_positive(c.head(n - 1).norm());
  Embedding emb;
  emb.coords = Eigen::MatrixXd::Zero(r, n);
  int kept = 0;
  // Nonzero coefficients form an ascending negative prefix, so the induced
  // Gram eigenvalues -c_i/2 come out in descending order.
  for (Eigen::Index i = 0; i < n - 1 && kept < r; ++i) {
    const double mu = -0.5 * c(i);
    if (mu <= eps) break;
    emb.coords.row(kept) = std::sqrt(mu) * s.col(i).transpose();
    ++kept;
  }
  Eigen::MatrixXd gram = emb.coords.transpose() * emb.coords;
  SquaredDissimilarityMatrix d_lcmds = edm_of_embedding(emb);
  return CmdsResult{std::move(emb), std::move(gram), std::move(d_lcmds), kept};
}

}  // namespace detail

// Objective and relative errors per method per dimension. Spectral work is
// shared: classical scaling rows reuse one decomposition of the centered
// Gram matrix, projection-based rows one decomposition of the principal
// block. The one-off setup cost is spread evenly over a family's rows in
// wall_ms.
inline SweepReport run_sweep(const SquaredDissimilarityMatrix& d, const std::vector<Method>& methods,
                             int r_min, int r_max, const Eigen::MatrixXd* d_original = nullptr,
                             const SweepConfig& cfg = {}) {
  const Eigen::Index n = d.size();
  if (r_min < 1 || r_min > r_max || r_max > n - 1)
    throw std::invalid_argument("run_sweep: need 1 <= r_min <= r_max <= n - 1");
  if (d_original && (d_original->rows() != n || d_original->cols() != n))
    throw std::invalid_argument("run_sweep: original matrix shape mismatch");
  const Eigen::MatrixXd& dm = d.matrix();
  const double input_norm2 = dm.squaredNorm();
  if (input_norm2 == 0.0) throw std::invalid_argument("run_sweep: input matrix is zero");
  const int range = r_max - r_min + 1;

  SweepReport report;
  report.rows.reserve(static_cast<std::size_t>(range) * methods.size());

  // Lazy per-family spectral state.
  std::optional<SpectralData> gram_spec;
  double gram_setup_ms = 0.0;
  struct HatState {
    QDecomposition qd;
    SpectralData spec;
    Eigen::MatrixXd s;
  };
  std::optional<HatState> hat;
  double hat_setup_ms = 0.0;

  const auto ensure_gram = [&]() {
    if (gram_spec) return;
    const auto t0 = std::chrono::steady_clock::now();
    const Eigen::MatrixXd v = centering_v(n);
    Eigen::MatrixXd x = -0.5 * (v * dm * v);
    x = 0.5 * (x + x.transpose()).eval();
    gram_spec = symmetric_eigen(x);
    gram_setup_ms = detail::ms_since(t0);
  };
  const auto ensure_hat = [&]() {
    if (hat) return;
    const auto t0 = std::chrono::steady_clock::now();
    HatState state;
    state.qd = q_decompose(dm);
    state.spec = symmetric_eigen(state.qd.d_hat);
    state.s = build_s(state.spec, n);
    hat = std::move(state);
    hat_setup_ms = detail::ms_since(t0);
  };

  const auto push_row = [&](Method method, int r, double objective,
                            const Eigen::MatrixXd* fit, double row_ms) {
    SweepRow row;
    row.method = method;
    row.r = r;
    row.objective = objective;
    row.rel_err_input = objective / input_norm2;
    if (fit) row.rel_err_input = (dm - *fit).squaredNorm() / input_norm2;
    if (d_original && fit) row.rel_err_original = relative_error(*d_original, *fit);
    row.wall_ms = row_ms;
    report.rows.push_back(row);
  };

  for (Method method : methods) {
    switch (method) {
      case Method::cmds: {
        ensure_gram();
        for (int r = r_min; r <= r_max; ++r) {
          const auto t0 = std::chrono::steady_clock::now();
          const CmdsResult res = detail::cmds_from_spectrum(*gram_spec, r);
          const double obj = (dm - res.d_cmds.matrix()).squaredNorm();
          push_row(method, r, obj, &res.d_cmds.matrix(),
                   detail::ms_since(t0) + gram_setup_ms / range);
        }
        break;
      }
      case Method::lower_cmds: {
        ensure_hat();
        for (int r = r_min; r <= r_max; ++r) {
          const auto t0 = std::chrono::steady_clock::now();
          const detail::WaterFill fill = detail::water_fill(hat->spec.eigenvalues, hat->qd.xi, r);
          const CmdsResult res = detail::lower_cmds_from_waterfill(fill.c, hat->s, r);
          const double obj = (dm - res.d_cmds.matrix()).squaredNorm();
          push_row(method, r, obj, &res.d_cmds.matrix(),
                   detail::ms_since(t0) + hat_setup_ms / range);
        }
        break;
      }
      case Method::lower_bound: {
        ensure_hat();
        for (int r = r_min; r <= r_max; ++r) {
          const auto t0 = std::chrono::steady_clock::now();
          const detail::WaterFill fill = detail::water_fill(hat->spec.eigenvalues, hat->qd.xi, r);
          push_row(method, r, fill.objective, nullptr,
                   detail::ms_since(t0) + hat_setup_ms / range);
        }
        break;
      }
      case Method::sstress: {
        if (n > cfg.sstress_point_cap) break;
        for (int r = r_min; r <= r_max; ++r) {
          const auto t0 = std::chrono::steady_clock::now();
          const SstressResult res = detail::solve_sstress_impl(dm, r, cfg.sstress, nullptr);
          push_row(method, r, res.objective, &res.d_t, detail::ms_since(t0));
        }
        break;
      }
    }
  }
  return report;
}

struct EmbeddingSet {
  Method method = Method::cmds;
  std::vector<std::pair<int, Embedding>> by_r;
};

struct KnnRow {
  Method method = Method::cmds;
  int r = 0;
  int n_train = 0;
  int n_test = 0;
  double accuracy = 0.0;
};

struct KnnReport {
  std::vector<KnnRow> rows;

  std::string to_csv() const {
    std::string out = "method,r,n_train,n_test,accuracy\n";
    for (const KnnRow& row : rows) {
      out += method_name(row.method);
      out += ',' + std::to_string(row.r);
      out += ',' + std::to_string(row.n_train);
      out += ',' + std::to_string(row.n_test);
      out += ',' + detail::format_g17(row.accuracy);
      out += '\n';
    }
    return out;
  }
};

// One-nearest-neighbor accuracy per method per dimension. Without a split
// seed the first ceil(train_fraction * m) points train and the rest test;
// with one, indices are shuffled deterministically first. Distance ties go
// to the lowest training position.
inline KnnReport knn_classify(const std::vector<EmbeddingSet>& sets, const std::vector<int>& labels,
                              double train_fraction,
                              std::optional<std::uint64_t> split_seed = std::nullopt) {
  const std::size_t m = labels.size();
  if (m < 2) throw std::invalid_argument("knn_classify: need at least 2 labeled points");
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw std::invalid_argument("knn_classify: train_fraction must lie strictly between 0 and 1");
  const std::size_t n_train =
      static_cast<std::size_t>(std::ceil(train_fraction * static_cast<double>(m)));
  if (n_train == 0 || n_train >= m)
    throw std::invalid_argument("knn_classify: split leaves an empty train or test side");
  const std::size_t n_test = m - n_train;

  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  if (split_seed) {
    // Explicit Fisher-Yates; std::shuffle's draw pattern is not pinned down
    // by the standard and the split must reproduce across platforms.
    std::mt19937_64 rng(*split_seed);
    for (std::size_t i = m - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
      std::swap(order[i], order[j]);
    }
  }

  KnnReport report;
  for (const EmbeddingSet& set : sets) {
    for (const auto& [r, emb] : set.by_r) {
      if (static_cast<std::size_t>(emb.point_count()) != m)
        throw std::invalid_argument("knn_classify: embedding point count does not match labels");
      std::size_t correct = 0;
      for (std::size_t t = n_train; t < m; ++t) {
        const Eigen::Index test_col = static_cast<Eigen::Index>(order[t]);
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_train = 0;
        for (std::size_t s = 0; s < n_train; ++s) {
          const Eigen::Index train_col = static_cast<Eigen::Index>(order[s]);
          const double dist = (emb.coords.col(test_col) - emb.coords.col(train_col)).squaredNorm();
          if (dist < best) {
            best = dist;
            best_train = s;
          }
        }
        if (labels[order[best_train]] == labels[order[t]]) ++correct;
      }
      KnnRow row;
      row.method = set.method;
      row.r = r;
      row.n_train = static_cast<int>(n_train);
      row.n_test = static_cast<int>(n_test);
      row.accuracy = static_cast<double>(correct) / static_cast<double>(n_test);
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace mdscale
