#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mdscale/linalg.hpp"

namespace mdscale {

// Rows are points. Labels are optional; when present there is one per row.
struct PointCloud {
  Eigen::MatrixXd points;
  std::vector<int> labels;
};

// mask(i, t) is true when coordinate t of point i was observed.
struct MaskedPointCloud {
  PointCloud cloud;
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> mask;
};

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

namespace detail {

// Box-Muller over mt19937_64 draws. std::normal_distribution is free to
// differ between standard libraries, so the transform is spelled out to keep
// generated fixtures bit-identical across platforms.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open_closed();
    const double u2 = uniform_open_closed();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double angle = two_pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  // (0, 1]: the shift keeps log() away from zero.
  double uniform_open_closed() {
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  std::mt19937_64 rng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

inline unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("MDSCALE_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1)
      hw = std::min<long>(parsed, 1024);
  }
  return hw;
}

template <typename Fn>
inline void parallel_for(Eigen::Index count, Fn&& fn) {
  const unsigned budget =
      std::min<unsigned>(thread_budget(), static_cast<unsigned>(std::max<Eigen::Index>(count, 1)));
  if (budget <= 1 || count < 2) {
    for (Eigen::Index i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(budget);
  std::atomic<Eigen::Index> next{0};
  for (unsigned t = 0; t < budget; ++t) {
    workers.emplace_back([&]() {
      for (;;) {
        const Eigen::Index i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& w : workers) w.join();
}

// Symmetric hollow Gaussian noise scaled so reference_norm / ||G||_F equals
// snr exactly. Entries are drawn row-major over the full square so the
// stream consumed from the seed does not depend on traversal shortcuts.
inline Eigen::MatrixXd scaled_symmetric_noise(Eigen::Index n, double reference_norm,
                                              double snr, std::uint64_t seed) {
  GaussianSampler gauss(seed);
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = gauss();
  g = 0.5 * (g + g.transpose()).eval();
  g.diagonal().setZero();
  const double norm = g.norm();
  if (norm == 0.0)
    throw std::runtime_error("noise draw collapsed to zero, try another seed");
  g *= reference_norm / (snr * norm);
  return g;
}

inline std::string join_sizes(std::vector<Eigen::Index> sizes) {
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(sizes[i]);
  }
  return out;
}

struct WeightedAdjacency {
  std::vector<std::vector<std::pair<Eigen::Index, double>>> neighbors;
};

// Throws when the graph has more than one connected component; the message
// lists the component sizes so the caller can tell a lone outlier from a
// genuine split.
inline void require_connected(const WeightedAdjacency& adj, const char* who) {
  const Eigen::Index n = static_cast<Eigen::Index>(adj.neighbors.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Eigen::Index> sizes;
  for (Eigen::Index start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Eigen::Index size = 0;
    std::vector<Eigen::Index> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      const Eigen::Index node = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& [next, w] : adj.neighbors[static_cast<std::size_t>(node)]) {
        if (!seen[static_cast<std::size_t>(next)]) {
          seen[static_cast<std::size_t>(next)] = 1;
          stack.push_back(next);
        }
      }
    }
    sizes.push_back(size);
  }
  if (sizes.size() > 1)
    throw std::domain_error(std::string(who) + ": graph is disconnected (component sizes: " +
                            join_sizes(std::move(sizes)) + ")");
}

inline Eigen::MatrixXd all_pairs_shortest_paths(const WeightedAdjacency& adj) {
  const Eigen::Index n = static_cast<Eigen::Index>(adj.neighbors.size());
  Eigen::MatrixXd dist(n, n);
  parallel_for(n, [&](Eigen::Index source) {
    std::vector<double> best(static_cast<std::size_t>(n),
                             std::numeric_limits<double>::infinity());
    using Item = std::pair<double, Eigen::Index>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
    best[static_cast<std::size_t>(source)] = 0.0;
    frontier.emplace(0.0, source);
    while (!frontier.empty()) {
      const auto [d, node] = frontier.top();
      frontier.pop();
      if (d > best[static_cast<std::size_t>(node)]) continue;
      for (const auto& [next, w] : adj.neighbors[static_cast<std::size_t>(node)]) {
        const double cand = d + w;
        if (cand < best[static_cast<std::size_t>(next)]) {
          best[static_cast<std::size_t>(next)] = cand;
          frontier.emplace(cand, next);
        }
      }
    }
    for (Eigen::Index j = 0; j < n; ++j) dist(source, j) = best[static_cast<std::size_t>(j)];
  });
  return dist;
}

}  // namespace detail

inline SquaredDissimilarityMatrix euclidean_metric(const PointCloud& cloud) {
  if (cloud.points.rows() < 2)
    throw std::invalid_argument("euclidean_metric: need at least 2 points");
  Embedding emb;
  emb.coords = cloud.points.transpose();
  return edm_of_embedding(emb);
}

// Additive symmetric hollow Gaussian noise on the squared dissimilarities,
// calibrated so ||D||_F / ||noise||_F equals snr exactly. The result can
// carry negative entries; that is intended and survives construction.
inline SquaredDissimilarityMatrix perturb_post_square(const SquaredDissimilarityMatrix& d,
                                                      double snr, std::uint64_t seed) {
  if (!(snr > 0.0))
    throw std::invalid_argument("perturb_post_square: snr must be positive");
  const Eigen::MatrixXd& m = d.matrix();
  const Eigen::MatrixXd g = detail::scaled_symmetric_noise(d.size(), m.norm(), snr, seed);
  return SquaredDissimilarityMatrix(m + g);
}

// Noise applied to the entrywise square roots, then squared back. The SNR is
// measured against the non-squared matrix. Entries stay nonnegative by
// construction, unlike the post-square variant.
inline SquaredDissimilarityMatrix perturb_pre_square(const SquaredDissimilarityMatrix& d,
                                                     double snr, std::uint64_t seed) {
  if (!(snr > 0.0))
    throw std::invalid_argument("perturb_pre_square: snr must be positive");
  if (d.min_entry() < 0.0)
    throw std::domain_error(
        "perturb_pre_square: input has negative entries, square roots are undefined");
  const Eigen::MatrixXd roots = d.matrix().cwiseSqrt();
  const Eigen::MatrixXd g = detail::scaled_symmetric_noise(d.size(), roots.norm(), snr, seed);
  Eigen::MatrixXd noisy = (roots + g).array().square().matrix();
  noisy.diagonal().setZero();
  return SquaredDissimilarityMatrix(std::move(noisy));
}

// Squared geodesic distances over the union-symmetrized k-nearest-neighbor
// graph with Euclidean edge weights. set squared to false to inspect the raw
// geodesic distances instead.
inline SquaredDissimilarityMatrix knn_geodesic_metric(const PointCloud& cloud, int k = 10,
                                                      bool squared = true) {
  const Eigen::Index m = cloud.points.rows();
  if (m < 2) throw std::invalid_argument("knn_geodesic_metric: need at least 2 points");
  if (k < 1 || k >= m)
    throw std::invalid_argument("knn_geodesic_metric: k must satisfy 1 <= k < point count, got k=" +
                                std::to_string(k) + " with " + std::to_string(m) + " points");
  detail::WeightedAdjacency adj;
  adj.neighbors.resize(static_cast<std::size_t>(m));

  std::vector<std::vector<std::pair<Eigen::Index, double>>> knn(static_cast<std::size_t>(m));
  detail::parallel_for(m, [&](Eigen::Index i) {
    std::vector<std::pair<double, Eigen::Index>> cand;
    cand.reserve(static_cast<std::size_t>(m - 1));
    for (Eigen::Index j = 0; j < m; ++j) {
      if (j == i) continue;
      cand.emplace_back((cloud.points.row(i) - cloud.points.row(j)).norm(), j);
    }
    std::partial_sort(cand.begin(), cand.begin() + k, cand.end());
    auto& mine = knn[static_cast<std::size_t>(i)];
    mine.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) mine.emplace_back(cand[static_cast<std::size_t>(t)].second,
                                                  cand[static_cast<std::size_t>(t)].first);
  });
  // Union symmetrization: an edge exists when either endpoint selected the
  // other. Duplicate insertions are harmless for the shortest-path pass.
  for (Eigen::Index i = 0; i < m; ++i) {
    for (const auto& [j, w] : knn[static_cast<std::size_t>(i)]) {
      adj.neighbors[static_cast<std::size_t>(i)].emplace_back(j, w);
      adj.neighbors[static_cast<std::size_t>(j)].emplace_back(i, w);
    }
  }
  detail::require_connected(adj, "knn_geodesic_metric");
  Eigen::MatrixXd dist = detail::all_pairs_shortest_paths(adj);
  if (squared) dist = dist.array().square().matrix();
  dist = 0.5 * (dist + dist.transpose()).eval();
  dist.diagonal().setZero();
  return SquaredDissimilarityMatrix(std::move(dist));
}

// Interprets NaN coordinates as unobserved. Masked slots are zeroed in the
// stored points so later arithmetic never touches a NaN.
inline MaskedPointCloud masked_from_nan(const Eigen::MatrixXd& points) {
  MaskedPointCloud out;
  out.cloud.points = points;
  out.mask.resize(points.rows(), points.cols());
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    for (Eigen::Index t = 0; t < points.cols(); ++t) {
      const bool observed = !std::isnan(points(i, t));
      out.mask(i, t) = observed;
      if (!observed) out.cloud.points(i, t) = 0.0;
    }
  }
  return out;
}

// Squared dissimilarities from partially observed coordinates: the mean
// squared gap over the coordinates both points observed, scaled up to the
// full dimension count.
inline SquaredDissimilarityMatrix missing_data_metric(const MaskedPointCloud& data) {
  const Eigen::Index m = data.cloud.points.rows();
  const Eigen::Index dim = data.cloud.points.cols();
  if (m < 2) throw std::invalid_argument("missing_data_metric: need at least 2 points");
  if (data.mask.rows() != m || data.mask.cols() != dim)
    throw std::invalid_argument("missing_data_metric: mask shape must match the point array");
  for (Eigen::Index i = 0; i < m; ++i)
    if (!data.mask.row(i).any())
      throw std::invalid_argument("missing_data_metric: point " + std::to_string(i) +
                                  " observes no coordinates");
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      double sum = 0.0;
      Eigen::Index shared = 0;
      for (Eigen::Index t = 0; t < dim; ++t) {
        if (data.mask(i, t) && data.mask(j, t)) {
          const double gap = data.cloud.points(i, t) - data.cloud.points(j, t);
          sum += gap * gap;
          ++shared;
        }
      }
      if (shared == 0)
        throw std::domain_error("missing_data_metric: points " + std::to_string(i) + " and " +
                                std::to_string(j) + " share no observed coordinates");
      const double value = static_cast<double>(dim) / static_cast<double>(shared) * sum;
      d(i, j) = value;
      d(j, i) = value;
    }
  }
  return SquaredDissimilarityMatrix(std::move(d));
}

// Squared shortest-path distances over an undirected positively weighted
// graph. set squared to false to inspect the raw path lengths.
inline SquaredDissimilarityMatrix graph_metric(const std::vector<Edge>& edges,
                                               Eigen::Index node_count, bool squared = true) {
  if (node_count < 2) throw std::invalid_argument("graph_metric: need at least 2 nodes");
  detail::WeightedAdjacency adj;
  adj.neighbors.resize(static_cast<std::size_t>(node_count));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count)
      throw std::invalid_argument("graph_metric: edge endpoint out of range: " +
                                  std::to_string(e.u) + "-" + std::to_string(e.v));
    if (!(e.weight > 0.0))
      throw std::domain_error("graph_metric: edge " + std::to_string(e.u) + "-" +
                              std::to_string(e.v) + " has nonpositive weight " +
                              std::to_string(e.weight));
    if (e.u == e.v) continue;
    adj.neighbors[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.weight);
    adj.neighbors[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.weight);
  }
  detail::require_connected(adj, "graph_metric");
  Eigen::MatrixXd dist = detail::all_pairs_shortest_paths(adj);
  if (squared) dist = dist.array().square().matrix();
  dist = 0.5 * (dist + dist.transpose()).eval();
  dist.diagonal().setZero();
  return SquaredDissimilarityMatrix(std::move(dist));
}

}  // namespace mdscale
