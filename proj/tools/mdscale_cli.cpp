// Command-line front end: metric generators, embedding solvers, the error
// decomposition sweep, and the evaluation harness. Every run leaves a
// run_manifest.json next to its outputs so results can be reproduced.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mdscale/mdscale.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNotConverged = 4;

struct RunContext {
  std::string subcommand;
  json parameters = json::object();
  json inputs = json::object();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void note_input(const fs::path& path) {
    inputs[path.string()] = mdscale::file_digest_hex(path);
  }

  void note_output(const fs::path& path) { outputs.push_back(path.string()); }

  // The manifest lands in the directory that received the outputs; reruns
  // into the same directory replace it, keeping exactly one per directory.
  void write_manifest(const fs::path& out_hint) {
    json m;
    m["subcommand"] = subcommand;
    m["parameters"] = parameters;
    m["inputs"] = inputs;
    m["seed"] = seed ? json(*seed) : json(nullptr);
    m["tool_version"] = mdscale::kVersion;
    m["wall_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    m["outputs"] = outputs;
    fs::path dir = out_hint.parent_path();
    if (dir.empty()) dir = ".";
    mdscale::atomic_write_text(dir / "run_manifest.json", m.dump(2) + "\n");
  }
};

Eigen::MatrixXd load_matrix(const fs::path& path, bool sqrt_input, RunContext& ctx) {
  ctx.note_input(path);
  Eigen::MatrixXd m = mdscale::read_matrix_csv(path);
  if (sqrt_input) m = m.array().square().matrix();
  return m;
}

mdscale::SquaredDissimilarityMatrix load_sdm(const fs::path& path, bool sqrt_input,
                                             RunContext& ctx) {
  mdscale::SquaredDissimilarityMatrix d(load_matrix(path, sqrt_input, ctx));
  if (d.negative_entry_count() > 0)
    std::cerr << "warning: " << path.string() << " carries " << d.negative_entry_count()
              << " negative entries (min " << d.min_entry() << "); treating as is\n";
  return d;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, RunContext& ctx) {
  std::uint64_t seed;
  if (flag) {
    seed = *flag;
  } else {
    // No seed given: draw one and record it so the run stays reproducible.
    std::random_device rd;
    seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  ctx.seed = seed;
  ctx.parameters["seed"] = seed;
  return seed;
}

std::pair<int, int> parse_dims(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int r = std::stoi(text);
      return {r, r};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--dims", "expected an integer or A:B range, got '" + text + "'");
  }
}

// Spectrum diagnostics recorded with generated matrices: how far from
// Euclidean the metric is, measured on the principal block. Skipped for
// large instances where the extra eigendecomposition would dominate the run.
json spectrum_diagnostics(const mdscale::SquaredDissimilarityMatrix& d) {
  json out;
  if (d.size() > 1200) {
    out["skipped"] = true;
    return out;
  }
  const mdscale::QDecomposition qd = mdscale::q_decompose(d.matrix());
  const mdscale::SpectralData spec = mdscale::symmetric_eigen(qd.d_hat);
  const double eps = mdscale::epsilon_positive(spec.eigenvalues.norm());
  out["min_eigenvalue_hat"] = spec.eigenvalues(0);
  out["max_eigenvalue_hat"] = spec.eigenvalues(spec.eigenvalues.size() - 1);
  out["positive_eigenvalues"] = (spec.eigenvalues.array() > eps).count();
  out["epsilon"] = eps;
  return out;
}

void write_generated(const fs::path& out, const mdscale::SquaredDissimilarityMatrix& d,
                     json meta, RunContext& ctx) {
  mdscale::write_matrix_csv(out, d.matrix());
  ctx.note_output(out);
  meta["n"] = d.size();
  meta["negative_entries"] = d.negative_entry_count();
  meta["min_entry"] = d.min_entry();
  meta["spectrum"] = spectrum_diagnostics(d);
  const fs::path meta_path = out.string() + ".meta.json";
  mdscale::atomic_write_text(meta_path, meta.dump(2) + "\n");
  ctx.note_output(meta_path);
  ctx.write_manifest(out);
}

mdscale::Method parse_method(const std::string& name) {
  const auto m = mdscale::method_from_name(name);
  if (!m)
    throw CLI::ValidationError("--method", "unknown method '" + name + "'");
  return *m;
}

// ---- gen ----------------------------------------------------------------

struct GenCommon {
  std::string out;
  std::string points;
  std::string matrix;
  std::string edges;
  double snr = 0.0;
  std::optional<std::uint64_t> seed;
  int k = 10;
  bool raw = false;
};

void run_gen_euclidean(const GenCommon& opt) {
  RunContext ctx;
  ctx.subcommand = "gen euclidean";
  ctx.parameters = {{"points", opt.points}, {"out", opt.out}};
  ctx.note_input(opt.points);
  mdscale::PointCloud cloud{mdscale::read_points_csv(opt.points), {}};
  write_generated(opt.out, mdscale::euclidean_metric(cloud),
                  json{{"generator", "euclidean"}}, ctx);
}

void run_gen_perturb(const GenCommon& opt, bool pre_square) {
  RunContext ctx;
  ctx.subcommand = pre_square ? "gen perturb-pre" : "gen perturb-post";
  ctx.parameters = {{"matrix", opt.matrix}, {"snr", opt.snr}, {"out", opt.out}};
  const std::uint64_t seed = resolve_seed(opt.seed, ctx);
  const mdscale::SquaredDissimilarityMatrix clean = load_sdm(opt.matrix, false, ctx);
  const mdscale::SquaredDissimilarityMatrix noisy =
      pre_square ? mdscale::perturb_pre_square(clean, opt.snr, seed)
                 : mdscale::perturb_post_square(clean, opt.snr, seed);
  json meta{{"generator", pre_square ? "perturb_pre_square" : "perturb_post_square"},
            {"snr_target", opt.snr},
            {"seed", seed}};
  const double noise_norm = (noisy.matrix() - clean.matrix()).norm();
  if (!pre_square && noise_norm > 0.0)
    meta["achieved_snr"] = clean.matrix().norm() / noise_norm;
  if (pre_square && noise_norm > 0.0)
    meta["post_square_norm_ratio"] = clean.matrix().norm() / noise_norm;
  write_generated(opt.out, noisy, std::move(meta), ctx);
}

void run_gen_geodesic(const GenCommon& opt) {
  RunContext ctx;
  ctx.subcommand = "gen geodesic";
  ctx.parameters = {{"points", opt.points}, {"k", opt.k}, {"raw", opt.raw}, {"out", opt.out}};
  ctx.note_input(opt.points);
  mdscale::PointCloud cloud{mdscale::read_points_csv(opt.points), {}};
  write_generated(opt.out, mdscale::knn_geodesic_metric(cloud, opt.k, !opt.raw),
                  json{{"generator", "knn_geodesic"}, {"k", opt.k}, {"squared", !opt.raw}}, ctx);
}

void run_gen_missing(const GenCommon& opt) {
  RunContext ctx;
  ctx.subcommand = "gen missing";
  ctx.parameters = {{"points", opt.points}, {"out", opt.out}};
  ctx.note_input(opt.points);
  const mdscale::MaskedPointCloud masked =
      mdscale::masked_from_nan(mdscale::read_points_csv(opt.points));
  const Eigen::Index observed = masked.mask.cast<int>().sum();
  json meta{{"generator", "missing_data"},
            {"observed_fraction",
             static_cast<double>(observed) / static_cast<double>(masked.mask.size())}};
  write_generated(opt.out, mdscale::missing_data_metric(masked), std::move(meta), ctx);
}

void run_gen_graph(const GenCommon& opt) {
  RunContext ctx;
  ctx.subcommand = "gen graph";
  ctx.parameters = {{"edges", opt.edges}, {"raw", opt.raw}, {"out", opt.out}};
  ctx.note_input(opt.edges);
  const mdscale::EdgeList list = mdscale::read_edge_list(opt.edges);
  write_generated(opt.out, mdscale::graph_metric(list.edges, list.node_count, !opt.raw),
                  json{{"generator", "graph"},
                       {"nodes", list.node_count},
                       {"edges", list.edges.size()},
                       {"squared", !opt.raw}},
                  ctx);
}

// ---- embed ---------------------------------------------------------------

int run_embed(const std::string& matrix, const std::string& method_name, int r,
              const std::string& out, bool sqrt_input, double tolerance, int max_iter) {
  RunContext ctx;
  ctx.subcommand = "embed";
  ctx.parameters = {{"matrix", matrix}, {"method", method_name}, {"dim", r},
                    {"out", out},       {"sqrt_input", sqrt_input}};
  const mdscale::Method method = parse_method(method_name);
  if (method == mdscale::Method::lower_bound)
    throw std::domain_error("embed: lower_bound certifies a floor, it has no embedding; "
                            "use method cmds, lower-cmds, or sstress");
  const mdscale::SquaredDissimilarityMatrix d = load_sdm(matrix, sqrt_input, ctx);

  const fs::path prefix(out);
  const auto path_for = [&](const char* tail) { return fs::path(prefix.string() + tail); };
  json summary{{"method", method_name}, {"r", r}, {"n", d.size()}};
  Eigen::MatrixXd coords;
  Eigen::MatrixXd edm;
  bool converged = true;

  switch (method) {
    case mdscale::Method::cmds: {
      const mdscale::CmdsResult res = mdscale::cmds(d, r);
      coords = res.embedding.coords;
      edm = res.d_cmds.matrix();
      summary["objective"] = (edm - d.matrix()).squaredNorm();
      summary["strain"] = mdscale::strain_value(d, res);
      summary["kept_count"] = res.kept_count;
      break;
    }
    case mdscale::Method::lower_cmds: {
      const mdscale::LowerCmdsResult res = mdscale::lower_cmds(d, r);
      coords = res.scaled.embedding.coords;
      edm = res.scaled.d_cmds.matrix();
      summary["objective"] = (edm - d.matrix()).squaredNorm();
      summary["objective_projection"] = res.projection.objective;
      summary["lower_bound"] = mdscale::lower_bound_value(d, r);
      summary["active_count"] = res.projection.active_count;
      summary["kept_count"] = res.scaled.kept_count;
      mdscale::write_matrix_csv(path_for("_dl.csv"), res.projection.d_l);
      ctx.note_output(path_for("_dl.csv"));
      mdscale::write_matrix_csv(path_for("_dlcmds.csv"), edm);
      ctx.note_output(path_for("_dlcmds.csv"));
      break;
    }
    case mdscale::Method::sstress: {
      mdscale::SstressConfig cfg;
      cfg.tolerance = tolerance;
      cfg.max_iterations = max_iter;
      ctx.parameters["tolerance"] = tolerance;
      ctx.parameters["max_iter"] = max_iter;
      const mdscale::SstressResult res = mdscale::solve_sstress(d, r, cfg);
      edm = res.d_t;
      // Coordinates come from classical scaling of the solution, which is
      // exact once the iterate is (near) a rank-r squared EDM.
      coords = mdscale::cmds(res.d_t, r).embedding.coords;
      summary["objective"] = res.objective;
      summary["iterations"] = res.iterations;
      summary["converged"] = res.converged;
      converged = res.converged;
      break;
    }
    case mdscale::Method::lower_bound:
      break;
  }

  mdscale::write_matrix_csv(path_for("_embedding.csv"), coords);
  ctx.note_output(path_for("_embedding.csv"));
  mdscale::write_matrix_csv(path_for("_edm.csv"), edm);
  ctx.note_output(path_for("_edm.csv"));
  mdscale::atomic_write_text(path_for("_summary.json"), summary.dump(2) + "\n");
  ctx.note_output(path_for("_summary.json"));
  ctx.write_manifest(prefix);

  if (!converged) {
    std::cerr << "solver did not converge within " << max_iter
              << " iterations; outputs hold the last iterate\n";
    return kExitNotConverged;
  }
  return 0;
}

// ---- decompose -------------------------------------------------------------

int run_decompose(const std::string& matrix, const std::string& dims, const std::string& out,
                  bool sqrt_input) {
  RunContext ctx;
  ctx.subcommand = "decompose";
  ctx.parameters = {{"matrix", matrix}, {"out", out}, {"sqrt_input", sqrt_input}};
  const mdscale::SquaredDissimilarityMatrix d = load_sdm(matrix, sqrt_input, ctx);
  const Eigen::Index n = d.size();
  auto [r_min, r_max] = dims.empty() ? std::pair<int, int>{1, static_cast<int>(n) - 1}
                                     : parse_dims(dims);
  ctx.parameters["dims"] = std::to_string(r_min) + ":" + std::to_string(r_max);
  if (r_min < 1 || r_min > r_max || r_max > n - 1)
    throw std::domain_error("decompose: need 1 <= r_min <= r_max <= n - 1 for an n=" +
                            std::to_string(n) + " matrix");

  // One decomposition of each flavor serves the full range.
  const Eigen::MatrixXd& dm = d.matrix();
  const mdscale::QDecomposition qd = mdscale::q_decompose(dm);
  const mdscale::SpectralData hat_spec = mdscale::symmetric_eigen(qd.d_hat);
  const Eigen::MatrixXd s = mdscale::build_s(hat_spec, n);
  const Eigen::MatrixXd s_hadamard = s.cwiseProduct(s);
  const Eigen::MatrixXd v = mdscale::centering_v(n);
  Eigen::MatrixXd x = -0.5 * (v * dm * v);
  x = 0.5 * (x + x.transpose()).eval();
  const mdscale::SpectralData gram_spec = mdscale::symmetric_eigen(x);

  std::string csv =
      "r,c1,c2,c2_squared,c3,total_predicted,total_measured,lower_bound,c4_formula,c4_measured\n";
  std::vector<double> totals;
  for (int r = r_min; r <= r_max; ++r) {
    const mdscale::MaskedSpectrum ms = mdscale::masked_spectrum(hat_spec, r);
    const mdscale::ErrorDecomposition dec =
        mdscale::detail::decompose_from_spectrum(ms, s_hadamard);
    const mdscale::CmdsResult fit = mdscale::detail::cmds_from_spectrum(gram_spec, r);
    const double measured = (fit.d_cmds.matrix() - dm).squaredNorm();
    const mdscale::detail::WaterFill fill =
        mdscale::detail::water_fill(hat_spec.eigenvalues, qd.xi, r);
    const mdscale::C4Quantity c4 =
        mdscale::detail::c4_from_parts(qd, hat_spec, s_hadamard, ms, fill.c);
    totals.push_back(dec.total);
    csv += std::to_string(r);
    for (double value : {dec.c1, dec.c2, dec.c2 * dec.c2, dec.c3, dec.total, measured,
                         dec.lower_bound, c4.formula, c4.measured})
      csv += ',' + mdscale::detail::format_g17(value);
    csv += '\n';
  }
  mdscale::atomic_write_text(out, csv);
  ctx.note_output(out);
  ctx.write_manifest(out);

  for (std::size_t i = 1; i < totals.size(); ++i) {
    if (totals[i] > totals[i - 1]) {
      std::cout << "total_predicted first increases at r=" << (r_min + static_cast<int>(i))
                << " (from " << totals[i - 1] << " to " << totals[i] << ")\n";
      return 0;
    }
  }
  std::cout << "no increase detected\n";
  return 0;
}

// ---- eval ------------------------------------------------------------------

int run_eval_sweep(const std::string& matrix, const std::vector<std::string>& method_names,
                   const std::string& dims, const std::string& original, const std::string& out,
                   bool sqrt_input, double tolerance, int max_iter) {
  RunContext ctx;
  ctx.subcommand = "eval sweep";
  ctx.parameters = {{"matrix", matrix}, {"out", out}, {"sqrt_input", sqrt_input},
                    {"methods", method_names}};
  const mdscale::SquaredDissimilarityMatrix d = load_sdm(matrix, sqrt_input, ctx);
  const Eigen::Index n = d.size();
  auto [r_min, r_max] = dims.empty() ? std::pair<int, int>{1, static_cast<int>(n) - 1}
                                     : parse_dims(dims);
  ctx.parameters["dims"] = std::to_string(r_min) + ":" + std::to_string(r_max);

  std::vector<mdscale::Method> methods;
  for (const std::string& name : method_names) methods.push_back(parse_method(name));

  std::optional<Eigen::MatrixXd> d_orig;
  if (!original.empty()) {
    ctx.parameters["original"] = original;
    d_orig = load_matrix(original, sqrt_input, ctx);
  }

  mdscale::SweepConfig cfg;
  cfg.sstress.tolerance = tolerance;
  cfg.sstress.max_iterations = max_iter;
  const mdscale::SweepReport report =
      mdscale::run_sweep(d, methods, r_min, r_max, d_orig ? &*d_orig : nullptr, cfg);
  mdscale::atomic_write_text(out, report.to_csv());
  ctx.note_output(out);
  ctx.write_manifest(out);
  return 0;
}

int run_eval_knn(const std::string& matrix, const std::string& labels_path,
                 const std::vector<std::string>& method_names, const std::string& dims,
                 double train_fraction, std::optional<std::uint64_t> seed, const std::string& out,
                 bool sqrt_input, double tolerance, int max_iter) {
  RunContext ctx;
  ctx.subcommand = "eval knn";
  ctx.parameters = {{"matrix", matrix},       {"labels", labels_path},
                    {"out", out},             {"sqrt_input", sqrt_input},
                    {"methods", method_names}, {"train_fraction", train_fraction}};
  const mdscale::SquaredDissimilarityMatrix d = load_sdm(matrix, sqrt_input, ctx);
  ctx.note_input(labels_path);
  const std::vector<int> labels = mdscale::read_labels(labels_path);
  if (static_cast<Eigen::Index>(labels.size()) != d.size())
    throw std::invalid_argument("eval knn: " + labels_path + " holds " +
                                std::to_string(labels.size()) + " labels but the matrix has " +
                                std::to_string(d.size()) + " points");
  const Eigen::Index n = d.size();
  auto [r_min, r_max] = dims.empty() ? std::pair<int, int>{1, static_cast<int>(n) - 1}
                                     : parse_dims(dims);
  ctx.parameters["dims"] = std::to_string(r_min) + ":" + std::to_string(r_max);
  if (r_min < 1 || r_min > r_max || r_max > n - 1)
    throw std::domain_error("eval knn: need 1 <= r_min <= r_max <= n - 1");
  std::optional<std::uint64_t> split_seed;
  if (seed) {
    split_seed = resolve_seed(seed, ctx);
  }

  std::vector<mdscale::EmbeddingSet> sets;
  for (const std::string& name : method_names) {
    const mdscale::Method method = parse_method(name);
    if (method == mdscale::Method::lower_bound)
      throw std::domain_error("eval knn: lower_bound has no embedding to classify with");
    mdscale::EmbeddingSet set;
    set.method = method;
    for (int r = r_min; r <= r_max; ++r) {
      switch (method) {
        case mdscale::Method::cmds:
          set.by_r.emplace_back(r, mdscale::cmds(d, r).embedding);
          break;
        case mdscale::Method::lower_cmds:
          set.by_r.emplace_back(r, mdscale::lower_cmds(d, r).scaled.embedding);
          break;
        case mdscale::Method::sstress: {
          mdscale::SstressConfig cfg;
          cfg.tolerance = tolerance;
          cfg.max_iterations = max_iter;
          const mdscale::SstressResult res = mdscale::solve_sstress(d, r, cfg);
          set.by_r.emplace_back(r, mdscale::cmds(res.d_t, r).embedding);
          break;
        }
        case mdscale::Method::lower_bound:
          break;
      }
    }
    sets.push_back(std::move(set));
  }

  const mdscale::KnnReport report = mdscale::knn_classify(sets, labels, train_fraction, split_seed);
  mdscale::atomic_write_text(out, report.to_csv());
  ctx.note_output(out);
  ctx.write_manifest(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squared-dissimilarity embedding toolkit: classical scaling, closed-form "
               "error decomposition, a fast rank-constrained lower bound, and an iterative "
               "squared-stress solver. Set MDSCALE_THREADS to cap internal parallelism."};
  app.require_subcommand(1);

  // gen
  GenCommon gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "Generate a squared dissimilarity matrix");
  gen->require_subcommand(1);
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", gen_opt.out, "Output matrix CSV path")->required();
  };
  CLI::App* g_euclid = gen->add_subcommand("euclidean", "Squared Euclidean distances of a point cloud");
  g_euclid->add_option("--points", gen_opt.points, "Points CSV, one row per point")->required();
  add_out(g_euclid);
  CLI::App* g_post = gen->add_subcommand("perturb-post",
                                         "Add symmetric hollow Gaussian noise to a matrix");
  g_post->add_option("--matrix", gen_opt.matrix, "Clean squared dissimilarity CSV")->required();
  g_post->add_option("--snr", gen_opt.snr, "Signal-to-noise ratio (Frobenius)")->required();
  g_post->add_option("--seed", gen_opt.seed, "RNG seed (auto-generated and recorded if absent)");
  add_out(g_post);
  CLI::App* g_pre = gen->add_subcommand("perturb-pre",
                                        "Perturb square roots, then square back");
  g_pre->add_option("--matrix", gen_opt.matrix, "Clean squared dissimilarity CSV")->required();
  g_pre->add_option("--snr", gen_opt.snr, "Signal-to-noise ratio against the root matrix")->required();
  g_pre->add_option("--seed", gen_opt.seed, "RNG seed (auto-generated and recorded if absent)");
  add_out(g_pre);
  CLI::App* g_geo = gen->add_subcommand("geodesic",
                                        "Squared geodesics over the k-nearest-neighbor graph");
  g_geo->add_option("--points", gen_opt.points, "Points CSV, one row per point")->required();
  g_geo->add_option("--k", gen_opt.k, "Neighbors per point")->default_val(10);
  g_geo->add_flag("--raw", gen_opt.raw, "Emit raw geodesic lengths instead of squares");
  add_out(g_geo);
  CLI::App* g_miss = gen->add_subcommand("missing",
                                         "Rescaled squared distances from partially observed "
                                         "points (missing coordinates written as nan)");
  g_miss->add_option("--points", gen_opt.points, "Points CSV with nan for unobserved entries")
      ->required();
  add_out(g_miss);
  CLI::App* g_graph = gen->add_subcommand("graph", "Squared shortest-path distances of a graph");
  g_graph->add_option("--edges", gen_opt.edges, "Edge CSV with rows u,v,weight")->required();
  g_graph->add_flag("--raw", gen_opt.raw, "Emit raw path lengths instead of squares");
  add_out(g_graph);

  // embed
  std::string e_matrix, e_method, e_out;
  int e_dim = 2;
  bool e_sqrt = false;
  double e_tol = 0.1;
  int e_max_iter = 10000;
  CLI::App* embed = app.add_subcommand("embed", "Embed a matrix and write coordinates + EDM");
  embed->add_option("--matrix", e_matrix, "Squared dissimilarity CSV")->required();
  embed->add_option("--method", e_method, "cmds | lower-cmds | sstress")->required();
  embed->add_option("--dim", e_dim, "Target dimension r")->required();
  embed->add_option("--out", e_out, "Output path prefix")->required();
  embed->add_flag("--sqrt-input", e_sqrt, "Square the input entries on load");
  embed->add_option("--tolerance", e_tol, "Solver stop threshold (sstress)")->default_val(0.1);
  embed->add_option("--max-iter", e_max_iter, "Solver iteration cap (sstress)")
      ->default_val(10000);

  // decompose
  std::string d_matrix, d_dims, d_out;
  bool d_sqrt = false;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "Closed-form embedding-error decomposition across dimensions");
  decompose->add_option("--matrix", d_matrix, "Squared dissimilarity CSV")->required();
  decompose->add_option("--dims", d_dims, "Dimension range A:B (default 1:n-1)");
  decompose->add_option("--out", d_out, "Output CSV path")->required();
  decompose->add_flag("--sqrt-input", d_sqrt, "Square the input entries on load");

  // eval
  CLI::App* eval = app.add_subcommand("eval", "Evaluation reports");
  eval->require_subcommand(1);
  std::string s_matrix, s_dims, s_original, s_out;
  std::vector<std::string> s_methods;
  bool s_sqrt = false;
  double s_tol = 0.1;
  int s_max_iter = 10000;
  CLI::App* esweep = eval->add_subcommand("sweep", "Objective and relative error per method per r");
  esweep->add_option("--matrix", s_matrix, "Squared dissimilarity CSV")->required();
  esweep->add_option("--method", s_methods,
                     "cmds | lower-cmds | sstress | lower-bound (repeatable)")
      ->required();
  esweep->add_option("--dims", s_dims, "Dimension range A:B (default 1:n-1)");
  esweep->add_option("--original", s_original, "Clean matrix for denoising error columns");
  esweep->add_option("--out", s_out, "Output CSV path")->required();
  esweep->add_flag("--sqrt-input", s_sqrt, "Square the input entries on load");
  esweep->add_option("--tolerance", s_tol, "Solver stop threshold (sstress rows)")->default_val(0.1);
  esweep->add_option("--max-iter", s_max_iter, "Solver iteration cap (sstress rows)")
      ->default_val(10000);

  std::string k_matrix, k_labels, k_dims, k_out;
  std::vector<std::string> k_methods;
  double k_fraction = 0.5;
  std::optional<std::uint64_t> k_seed;
  bool k_sqrt = false;
  double k_tol = 0.1;
  int k_max_iter = 10000;
  CLI::App* eknn = eval->add_subcommand("knn", "1-nearest-neighbor accuracy per method per r");
  eknn->add_option("--matrix", k_matrix, "Squared dissimilarity CSV")->required();
  eknn->add_option("--labels", k_labels, "Label file, one integer per row")->required();
  eknn->add_option("--method", k_methods, "cmds | lower-cmds | sstress (repeatable)")->required();
  eknn->add_option("--dims", k_dims, "Dimension range A:B (default 1:n-1)");
  eknn->add_option("--train-fraction", k_fraction, "Leading fraction used for training")
      ->default_val(0.5);
  eknn->add_option("--seed", k_seed, "Shuffle the split with this seed (default: no shuffle)");
  eknn->add_option("--out", k_out, "Output CSV path")->required();
  eknn->add_flag("--sqrt-input", k_sqrt, "Square the input entries on load");
  eknn->add_option("--tolerance", k_tol, "Solver stop threshold (sstress)")->default_val(0.1);
  eknn->add_option("--max-iter", k_max_iter, "Solver iteration cap (sstress)")->default_val(10000);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (g_euclid->parsed()) { run_gen_euclidean(gen_opt); return 0; }
    if (g_post->parsed()) { run_gen_perturb(gen_opt, false); return 0; }
    if (g_pre->parsed()) { run_gen_perturb(gen_opt, true); return 0; }
    if (g_geo->parsed()) { run_gen_geodesic(gen_opt); return 0; }
    if (g_miss->parsed()) { run_gen_missing(gen_opt); return 0; }
    if (g_graph->parsed()) { run_gen_graph(gen_opt); return 0; }
    if (embed->parsed())
      return run_embed(e_matrix, e_method, e_dim, e_out, e_sqrt, e_tol, e_max_iter);
    if (decompose->parsed()) return run_decompose(d_matrix, d_dims, d_out, d_sqrt);
    if (esweep->parsed())
      return run_eval_sweep(s_matrix, s_methods, s_dims, s_original, s_out, s_sqrt, s_tol,
                            s_max_iter);
    if (eknn->parsed())
      return run_eval_knn(k_matrix, k_labels, k_methods, k_dims, k_fraction, k_seed, k_out,
                          k_sqrt, k_tol, k_max_iter);
  } catch (const mdscale::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
