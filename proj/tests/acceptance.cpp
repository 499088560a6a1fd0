// Release gate for the library: every contractual behavior is exercised end
// to end and reported as one [PASS]/[FAIL] line with its tolerance and the
// measured number. The process exits with the count of failed lines, so a
// zero exit is the machine-readable "all green".
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mdscale/mdscale.hpp"
#include "test_support.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const char* name, bool pass, const std::string& detail, int& failures) {
  if (!pass) ++failures;
  std::printf("[%s] %2d. %s: %s\n", pass ? "PASS" : "FAIL", index, name, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return std::string(buf);
}

// ---- criteria 1, 2, 4: shared random fixture battery ------------------------

struct BatteryOutcome {
  double worst_total = 0.0;       // |measured - predicted| / (1 + |D|_F^2)
  double worst_strain = 0.0;      // |4*strain - c1| / scale
  double worst_block = 0.0;       // |fit block + 2*gram block| / (1 + |D|_F)
  double worst_corner = 0.0;      // |(xi - xi_fit)^2 - c2^2| / scale
  double worst_column = 0.0;      // |2*|df|^2 - c3| / scale
  double worst_floor = 0.0;       // max(bound - objective, 0) / scale
  double equality_gap = 0.0;      // |objective - bound| on the no-clip fixture
  int matrices = 0;
  long long checks = 0;
  double elapsed = 0.0;
};

BatteryOutcome run_battery() {
  BatteryOutcome out;
  const auto start = Clock::now();
  for (int i = 0; i < 200; ++i) {
    const int n = 3 + (i * 7) % 38;
    const Eigen::MatrixXd d = testsup::random_symmetric_hollow(n, 10000 + i);
    const double scale2 = 1.0 + d.squaredNorm();
    const double scale1 = 1.0 + d.norm();
    const mdscale::QDecomposition qd_in = mdscale::q_decompose(d);
    const std::vector<mdscale::ErrorDecomposition> rows = mdscale::sweep(d, 1, n - 1);
    ++out.matrices;
    for (int r = 1; r <= n - 1; ++r) {
      const mdscale::ErrorDecomposition& dec = rows[static_cast<std::size_t>(r - 1)];
      const mdscale::CmdsResult fit = mdscale::cmds(d, r);
      const double measured = (d - fit.d_cmds.matrix()).squaredNorm();
      out.worst_total = std::max(out.worst_total, std::abs(measured - dec.total) / scale2);

      out.worst_strain = std::max(
          out.worst_strain, std::abs(4.0 * mdscale::strain_value(d, fit) - dec.c1) / scale2);
      const mdscale::QDecomposition qd_fit = mdscale::q_decompose(fit.d_cmds.matrix());
      const mdscale::QDecomposition qd_gram = mdscale::q_decompose(fit.gram);
      out.worst_block = std::max(
          out.worst_block, (qd_fit.d_hat + 2.0 * qd_gram.d_hat).norm() / scale1);
      const double corner_sq = (qd_in.xi - qd_fit.xi) * (qd_in.xi - qd_fit.xi);
      out.worst_corner =
          std::max(out.worst_corner, std::abs(corner_sq - dec.c2 * dec.c2) / scale2);
      out.worst_column = std::max(
          out.worst_column,
          std::abs(2.0 * (qd_in.f - qd_fit.f).squaredNorm() - dec.c3) / scale2);

      const double objective = mdscale::project_onto_kappa(d, r).objective;
      out.worst_floor =
          std::max(out.worst_floor, std::max(dec.lower_bound - objective, 0.0) / scale2);
      ++out.checks;
    }
  }
  const Eigen::MatrixXd spread = testsup::hollow_with_spectrum({-5.0, -3.0, 8.0}, 12);
  out.equality_gap = std::abs(mdscale::project_onto_kappa(spread, 2).objective -
                              mdscale::lower_bound_value(spread, 2));
  out.elapsed = seconds_since(start);
  return out;
}

// ---- criterion 3 -------------------------------------------------------------

struct OracleOutcome {
  double worst_objective = 0.0;  // relative objective mismatch vs the oracle
  double worst_kkt = 0.0;        // normalized certificate violation
  bool support_ok = true;
  int fixtures = 0;
  double elapsed = 0.0;
};

double kkt_violation(const Eigen::VectorXd& lambda, double xi, int r, const Eigen::VectorXd& c,
                     bool& support_ok) {
  const Eigen::Index head = lambda.size();
  const double s = c(head) - xi;
  const double eps = mdscale::epsilon_positive(lambda.norm());
  const double scale = 1.0 + lambda.cwiseAbs().maxCoeff() + std::abs(xi);
  double worst = std::abs(c.sum() - (lambda.sum() + xi)) / scale;
  int nonzero = 0;
  for (Eigen::Index i = 0; i < head; ++i) {
    if (c(i) != 0.0) {
      ++nonzero;
      worst = std::max(worst, std::max(c(i), 0.0) / scale);
      worst = std::max(worst, std::abs(c(i) - lambda(i) - s) / scale);
      if (i >= static_cast<Eigen::Index>(r)) support_ok = false;
    } else if (i < static_cast<Eigen::Index>(r) && lambda(i) <= eps) {
      worst = std::max(worst, std::max(-(lambda(i) + s), 0.0) / scale);
    }
  }
  if (nonzero > r) support_ok = false;
  return worst;
}

OracleOutcome run_oracle_battery() {
  OracleOutcome out;
  const auto start = Clock::now();
  std::vector<Eigen::MatrixXd> fixtures;
  for (int n = 3; n <= 7; ++n)
    for (int t = 0; t < 30; ++t)
      fixtures.push_back(testsup::random_symmetric_hollow(n, 500 + n * 100 + t));
  fixtures.push_back(testsup::hollow_with_spectrum({-5.0, -3.0, 8.0}, 1));
  fixtures.push_back(testsup::hollow_with_spectrum({-10.0, -0.5, 9.0}, 2));
  fixtures.push_back(testsup::hollow_with_spectrum({-5.0, -3.0}, 3));

  for (const Eigen::MatrixXd& d : fixtures) {
    const int n = static_cast<int>(d.rows());
    const mdscale::QDecomposition qd = mdscale::q_decompose(d);
    const mdscale::SpectralData spec = mdscale::symmetric_eigen(qd.d_hat);
    ++out.fixtures;
    for (int r = 1; r <= n - 1; ++r) {
      const mdscale::KappaProjection proj = mdscale::project_onto_kappa(d, r);
      const testsup::BruteProjection brute =
          testsup::brute_force_kappa(spec.eigenvalues, qd.xi, r);
      out.worst_objective =
          std::max(out.worst_objective,
                   std::abs(proj.objective - brute.objective) / (1.0 + brute.objective));
      out.worst_kkt = std::max(
          out.worst_kkt, kkt_violation(spec.eigenvalues, qd.xi, r, proj.c, out.support_ok));
    }
  }
  out.elapsed = seconds_since(start);
  return out;
}

// ---- criterion 5 -------------------------------------------------------------

struct SandwichOutcome {
  double worst_slack = 0.0;  // most negative inequality slack / (1 + |D|_F)
  int solves = 0;
  int nonconverged = 0;
  double elapsed = 0.0;
};

SandwichOutcome run_sandwich() {
  SandwichOutcome out;
  const auto start = Clock::now();
  mdscale::SstressConfig cfg;
  cfg.tolerance = 1e-8;
  cfg.max_iterations = 100000;
  for (const int n : {6, 10, 14, 20}) {
    for (const std::uint64_t seed : {1u, 2u}) {
      const Eigen::MatrixXd d = testsup::random_symmetric_hollow(n, 7000 + seed * 100 + n);
      const double scale = 1.0 + d.norm();
      for (const int r : {1, n / 2, n - 1}) {
        const double lower = std::sqrt(mdscale::project_onto_kappa(d, r).objective);
        const mdscale::SstressResult st = mdscale::solve_sstress(d, r, cfg);
        const double mid = std::sqrt(st.objective);
        const double upper =
            std::sqrt((d - mdscale::cmds(d, r).d_cmds.matrix()).squaredNorm());
        out.worst_slack = std::min(out.worst_slack, (mid - lower) / scale);
        out.worst_slack = std::min(out.worst_slack, (upper - mid) / scale);
        ++out.solves;
        if (!st.converged) ++out.nonconverged;
      }
    }
  }
  out.elapsed = seconds_since(start);
  return out;
}

// ---- criterion 6 -------------------------------------------------------------

struct GrowthFixtureOutcome {
  std::string name;
  bool non_euclidean = false;
  bool tail_increases = false;   // nondecreasing past the minimum, strict net rise
  bool lower_nonincreasing = false;
  bool worse_than_min = false;   // total(n-1) > min_r total(r)
  int min_at = 0;
  double total_last = 0.0;
  double total_min = 0.0;
  std::string total_preview;
};

GrowthFixtureOutcome analyze_growth(const std::string& name, const Eigen::MatrixXd& d) {
  GrowthFixtureOutcome out;
  out.name = name;
  const int n = static_cast<int>(d.rows());
  const double jitter = 1e-9 * (1.0 + d.squaredNorm());

  const mdscale::SpectralData spec =
      mdscale::symmetric_eigen(mdscale::q_decompose(d).d_hat);
  out.non_euclidean =
      spec.eigenvalues.maxCoeff() > mdscale::epsilon_positive(spec.eigenvalues.norm());

  std::vector<double> totals;
  for (const mdscale::ErrorDecomposition& dec : mdscale::sweep(d, 1, n - 1))
    totals.push_back(dec.total);
  out.total_last = totals.back();
  out.total_min = *std::min_element(totals.begin(), totals.end());
  out.worse_than_min = out.total_last > out.total_min;

  // Growth past the optimum: from the argmin onward the totals must never
  // drop (beyond jitter) and must end strictly above the minimum. A strict
  // rise at every single step is impossible for any input, because totals
  // are exactly constant once r exceeds the count of usable directions.
  const std::size_t argmin = static_cast<std::size_t>(
      std::min_element(totals.begin(), totals.end()) - totals.begin());
  out.min_at = static_cast<int>(argmin) + 1;  // as a dimension value r
  bool nondecreasing = true;
  for (std::size_t i = argmin + 1; i < totals.size(); ++i)
    if (totals[i] < totals[i - 1] - jitter) nondecreasing = false;
  out.tail_increases = nondecreasing && out.total_last > out.total_min + jitter;

  out.lower_nonincreasing = true;
  double prev = std::numeric_limits<double>::infinity();
  for (int r = 1; r <= n - 1; ++r) {
    const auto fit = mdscale::lower_cmds(d, r);
    const double realized = (d - fit.scaled.d_cmds.matrix()).squaredNorm();
    if (realized > prev + jitter) out.lower_nonincreasing = false;
    prev = realized;
  }

  const int show = std::min<int>(5, static_cast<int>(totals.size()));
  for (int i = 0; i < show; ++i)
    out.total_preview += fmt(i ? ", %.6g" : "%.6g", totals[static_cast<std::size_t>(i)]);
  if (show < static_cast<int>(totals.size()))
    out.total_preview += fmt(", ..., %.6g", totals.back());
  return out;
}

// ---- criteria 8 and 9 fixtures ----------------------------------------------

Eigen::MatrixXd cluster_points(int per_cluster, int dim, double separation, std::uint64_t seed,
                               std::vector<int>& labels) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int m = 3 * per_cluster;
  Eigen::MatrixXd pts(m, dim);
  labels.assign(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    const int cluster = i / per_cluster;
    labels[static_cast<std::size_t>(i)] = cluster;
    for (int t = 0; t < dim; ++t) pts(i, t) = gauss(rng);
    pts(i, cluster) += separation;
  }
  return pts;
}

mdscale::MaskedPointCloud drop_fraction(const Eigen::MatrixXd& pts, int drop_per_point,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  mdscale::MaskedPointCloud out;
  out.cloud.points = pts;
  out.mask.setConstant(pts.rows(), pts.cols(), true);
  std::vector<int> coords(static_cast<std::size_t>(pts.cols()));
  for (Eigen::Index i = 0; i < pts.rows(); ++i) {
    for (std::size_t t = 0; t < coords.size(); ++t) coords[t] = static_cast<int>(t);
    for (std::size_t t = coords.size() - 1; t > 0; --t)
      std::swap(coords[t], coords[static_cast<std::size_t>(rng() % (t + 1))]);
    for (int t = 0; t < drop_per_point; ++t) {
      out.mask(i, coords[static_cast<std::size_t>(t)]) = false;
      out.cloud.points(i, coords[static_cast<std::size_t>(t)]) = 0.0;
    }
  }
  return out;
}

}  // namespace

int main() {
  std::printf("acceptance: squared-dissimilarity embedding toolkit\n");
  int failures = 0;

  // 1 / 2 / 4: closed-form error identity, its component identities, and the
  // certified floor, over one 200-matrix battery.
  BatteryOutcome battery;
  try {
    battery = run_battery();
    report(1, "closed-form total error identity", battery.worst_total <= 1e-7 && battery.elapsed < 60.0,
           fmt("max |measured-predicted|/(1+|D|^2) = %.3g (tol 1e-7) over %d matrices, n in 3..40, "
               "all r, %lld checks, %.1fs (budget 60s)",
               battery.worst_total, battery.matrices, battery.checks, battery.elapsed),
           failures);
    const double worst_component = std::max(
        std::max(battery.worst_strain, battery.worst_block),
        std::max(battery.worst_corner, battery.worst_column));
    report(2, "component identities of the truncation error", worst_component <= 1e-8,
           fmt("scaled residuals: strain-vs-c1 %.3g, fit-block-vs-gram %.3g, corner-vs-c2^2 %.3g, "
               "column-vs-c3 %.3g (tol 1e-8 each)",
               battery.worst_strain, battery.worst_block, battery.worst_corner,
               battery.worst_column),
           failures);
  } catch (const std::exception& e) {
    report(1, "closed-form total error identity", false, fmt("exception: %s", e.what()), failures);
    report(2, "component identities of the truncation error", false, "battery aborted", failures);
  }

  // 3: projection optimality against the exhaustive-support oracle.
  try {
    const OracleOutcome oracle = run_oracle_battery();
    report(3, "cone projection matches the exhaustive oracle",
           oracle.worst_objective <= 1e-7 && oracle.worst_kkt <= 1e-8 && oracle.support_ok &&
               oracle.elapsed < 60.0,
           fmt("max relative objective gap %.3g (tol 1e-7), max certificate violation %.3g "
               "(tol 1e-8), support bound %s, %d fixtures with n <= 7, all r, %.1fs (budget 60s)",
               oracle.worst_objective, oracle.worst_kkt, oracle.support_ok ? "held" : "BROKEN",
               oracle.fixtures, oracle.elapsed),
           failures);
  } catch (const std::exception& e) {
    report(3, "cone projection matches the exhaustive oracle", false,
           fmt("exception: %s", e.what()), failures);
  }

  try {
    report(4, "certified floor under the projection objective",
           battery.worst_floor <= 1e-9 && battery.equality_gap <= 1e-9,
           fmt("max scaled floor excess %.3g (tol 1e-9); no-clip fixture equality gap %.3g "
               "(tol 1e-9)",
               battery.worst_floor, battery.equality_gap),
           failures);
  } catch (const std::exception& e) {
    report(4, "certified floor under the projection objective", false,
           fmt("exception: %s", e.what()), failures);
  }

  // 5: the three fits order themselves by distance to the input.
  try {
    const SandwichOutcome sandwich = run_sandwich();
    report(5, "distance ordering of floor fit, iterative fit, plain fit",
           sandwich.worst_slack >= -1e-8,
           fmt("most negative scaled slack %.3g (tol -1e-8) over %d solves at stop threshold "
               "1e-8, %d unconverged, %.1fs",
               sandwich.worst_slack, sandwich.solves, sandwich.nonconverged, sandwich.elapsed),
           failures);
  } catch (const std::exception& e) {
    report(5, "distance ordering of floor fit, iterative fit, plain fit", false,
           fmt("exception: %s", e.what()), failures);
  }

  // 6: truncation error of the plain fit eventually grows with r on
  // non-Euclidean inputs; the floor fit never does.
  try {
    mdscale::PointCloud circle;
    circle.points.resize(20, 2);
    for (int i = 0; i < 20; ++i) {
      const double t = 2.0 * 3.14159265358979323846 * i / 20.0;
      circle.points(i, 0) = std::cos(t);
      circle.points(i, 1) = std::sin(t);
    }
    const std::vector<GrowthFixtureOutcome> growth = {
        analyze_growth("4-cycle", testsup::cycle4_metric()),
        analyze_growth("circle-20", mdscale::knn_geodesic_metric(circle, 2).matrix())};
    bool pass = true;
    std::string detail;
    for (const GrowthFixtureOutcome& g : growth) {
      const bool fixture_pass =
          g.non_euclidean && g.tail_increases && g.lower_nonincreasing && g.worse_than_min;
      pass = pass && fixture_pass;
      detail += fmt("\n       %s: totals [%s]; growth past the minimum at r=%d: %s; floor-fit "
                    "nonincreasing %s; last %.6g vs min %.6g %s",
                    g.name.c_str(), g.total_preview.c_str(), g.min_at,
                    g.tail_increases ? "yes" : "NO",
                    g.lower_nonincreasing ? "yes" : "NO",
                    g.total_last, g.total_min, g.total_last > g.total_min ? "(worse)" : "(NOT worse)");
    }
    report(6, "eventual error growth of the plain fit", pass,
           "per fixture: nondecreasing past the minimum with a strict net rise (jitter 1e-9), "
           "nonincreasing floor fit, and last > min" + detail,
           failures);
  } catch (const std::exception& e) {
    report(6, "eventual error growth of the plain fit", false, fmt("exception: %s", e.what()),
           failures);
  }

  // 7: exact recovery and vanishing components on Euclidean inputs.
  try {
    double worst_rel = 0.0;
    double worst_component = 0.0;
    for (int dim = 1; dim <= 6; ++dim) {
      for (const std::uint64_t seed : {1u, 2u, 3u}) {
        const Eigen::MatrixXd pts = testsup::random_points(12 + 2 * dim, dim, 8000 + seed * 10 + dim);
        const Eigen::MatrixXd d = testsup::squared_distances(pts);
        const mdscale::CmdsResult fit = mdscale::cmds(d, dim);
        worst_rel = std::max(worst_rel, (d - fit.d_cmds.matrix()).norm() / d.norm());
        const mdscale::ErrorDecomposition dec = mdscale::decompose_error(d, dim);
        const double scale = d.squaredNorm();
        worst_component = std::max({worst_component, dec.c1 / scale,
                                    dec.c2 * dec.c2 / scale, std::abs(dec.c3) / scale});
      }
    }
    report(7, "flat inputs are recovered exactly at their true dimension",
           worst_rel <= 1e-7 && worst_component <= 1e-8,
           fmt("max relative reconstruction error %.3g (tol 1e-7); max scaled component %.3g "
               "(tol 1e-8), dims 1..6",
               worst_rel, worst_component),
           failures);
  } catch (const std::exception& e) {
    report(7, "flat inputs are recovered exactly at their true dimension", false,
           fmt("exception: %s", e.what()), failures);
  }

  // 8: at snr 1.8 the floor fit reconstructs the clean matrix at least as
  // well as the full-rank plain fit, averaged over seeds.
  try {
    const int n = 40;
    double sum_plain = 0.0;
    double sum_floor = 0.0;
    const int seeds = 7;
    for (int s = 1; s <= seeds; ++s) {
      const Eigen::MatrixXd pts = testsup::random_points(n, 5, 9000 + s);
      const Eigen::MatrixXd clean = testsup::squared_distances(pts);
      const mdscale::SquaredDissimilarityMatrix noisy = mdscale::perturb_post_square(
          mdscale::SquaredDissimilarityMatrix(clean), 1.8, 4800 + static_cast<std::uint64_t>(s));
      const int r = n - 1;
      sum_plain += std::sqrt(mdscale::relative_error(clean, mdscale::cmds(noisy, r).d_cmds.matrix()));
      sum_floor += std::sqrt(
          mdscale::relative_error(clean, mdscale::lower_cmds(noisy, r).scaled.d_cmds.matrix()));
    }
    const double mean_plain = sum_plain / seeds;
    const double mean_floor = sum_floor / seeds;
    report(8, "denoising at snr 1.8 favors the floor fit", mean_floor <= mean_plain,
           fmt("mean clean-relative error over %d seeds: floor fit %.4g vs plain fit %.4g "
               "(margin %.4g, n=40, r=n-1)",
               seeds, mean_floor, mean_plain, mean_plain - mean_floor),
           failures);
  } catch (const std::exception& e) {
    report(8, "denoising at snr 1.8 favors the floor fit", false, fmt("exception: %s", e.what()),
           failures);
  }

  // 9: with 40% of coordinates dropped, nearest-neighbor accuracy of the
  // floor fit at full rank is at least the plain fit's, averaged over seeds.
  try {
    double sum_plain = 0.0;
    double sum_floor = 0.0;
    const int seeds = 5;
    for (int s = 1; s <= seeds; ++s) {
      std::vector<int> labels;
      const Eigen::MatrixXd pts =
          cluster_points(50, 20, 5.0, 11000 + static_cast<std::uint64_t>(s), labels);
      const mdscale::MaskedPointCloud masked =
          drop_fraction(pts, 8, 12000 + static_cast<std::uint64_t>(s));
      const mdscale::SquaredDissimilarityMatrix d = mdscale::missing_data_metric(masked);
      const int r = static_cast<int>(d.size()) - 1;
      mdscale::EmbeddingSet plain;
      plain.method = mdscale::Method::cmds;
      plain.by_r.emplace_back(r, mdscale::cmds(d, r).embedding);
      mdscale::EmbeddingSet floor;
      floor.method = mdscale::Method::lower_cmds;
      floor.by_r.emplace_back(r, mdscale::lower_cmds(d, r).scaled.embedding);
      const mdscale::KnnReport rep = mdscale::knn_classify(
          {plain, floor}, labels, 0.5, 13000 + static_cast<std::uint64_t>(s));
      sum_plain += rep.rows[0].accuracy;
      sum_floor += rep.rows[1].accuracy;
    }
    const double mean_plain = sum_plain / seeds;
    const double mean_floor = sum_floor / seeds;
    report(9, "nearest-neighbor accuracy with 40% dropped coordinates",
           mean_floor >= mean_plain,
           fmt("mean 1-nn accuracy over %d seeds: floor fit %.4g vs plain fit %.4g (margin "
               "%+.4g, 150 points, 3 clusters, r=n-1)",
               seeds, mean_floor, mean_plain, mean_floor - mean_plain),
           failures);
  } catch (const std::exception& e) {
    report(9, "nearest-neighbor accuracy with 40% dropped coordinates", false,
           fmt("exception: %s", e.what()), failures);
  }

  // 10: the floor pipeline stays within 3x the plain fit's wall time.
  try {
    const Eigen::MatrixXd d = testsup::random_symmetric_hollow(500, 31337);
    mdscale::cmds(d, 10);  // warm caches before timing
    auto median3 = [](std::vector<double> v) {
      std::sort(v.begin(), v.end());
      return v[1];
    };
    std::vector<double> plain_ms, floor_ms;
    for (int t = 0; t < 3; ++t) {
      auto t0 = Clock::now();
      mdscale::cmds(d, 10);
      plain_ms.push_back(seconds_since(t0) * 1000.0);
      t0 = Clock::now();
      mdscale::lower_cmds(d, 10);
      floor_ms.push_back(seconds_since(t0) * 1000.0);
    }
    const double plain = median3(plain_ms);
    const double floor_t = median3(floor_ms);
    report(10, "floor pipeline runtime parity at n=500", floor_t <= 3.0 * plain,
           fmt("median wall time: floor fit %.1f ms vs plain fit %.1f ms (ratio %.2f, limit 3)",
               floor_t, plain, floor_t / plain),
           failures);
  } catch (const std::exception& e) {
    report(10, "floor pipeline runtime parity at n=500", false, fmt("exception: %s", e.what()),
           failures);
  }

  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
