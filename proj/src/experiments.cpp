#include "graphcheb/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "graphcheb/cheb.hpp"
#include "graphcheb/distsim.hpp"
#include "graphcheb/filters.hpp"
#include "graphcheb/lasso.hpp"
#include "graphcheb/rng.hpp"
#include "graphcheb/wavelets.hpp"
#include "json.hpp"

namespace gcheb {

namespace {

double mean_squared_error(const Vector& estimate, const Vector& truth) {
  return (estimate - truth).squaredNorm() / static_cast<double>(truth.size());
}

// Quadratic reference signal of the denoising experiments.
Vector smooth_signal(const WeightedGraph& g) {
  Vector f(g.node_count);
  for (int i = 0; i < g.node_count; ++i) {
    const double x = g.coords[static_cast<std::size_t>(i)][0];
    const double y = g.coords[static_cast<std::size_t>(i)][1];
    f[i] = x * x + y * y - 1.0;
  }
  return f;
}

// Piecewise signal with a jump across the anti-diagonal.
Vector piecewise_signal(const WeightedGraph& g) {
  Vector f(g.node_count);
  for (int i = 0; i < g.node_count; ++i) {
    const double x = g.coords[static_cast<std::size_t>(i)][0];
    const double y = g.coords[static_cast<std::size_t>(i)][1];
    f[i] = (y >= 1.0 - x) ? -2.0 * x + 0.5 : x * x + y * y + 0.5;
  }
  return f;
}

Vector add_noise(const Vector& f, double sigma, Rng& rng) {
  Vector y(f.size());
  for (Index i = 0; i < f.size(); ++i) y[i] = f[i] + sigma * rng.normal();
  return y;
}

constexpr int kMaxAttemptFactor = 50;

}  // namespace

TikhonovExperimentReport run_tikhonov_experiment(const TikhonovExperimentConfig& cfg) {
  TikhonovExperimentReport report;
  report.config = cfg;

  std::uint64_t attempt = 0;
  const std::uint64_t attempt_cap =
      static_cast<std::uint64_t>(cfg.trials) * kMaxAttemptFactor;
  while (report.connected_trials < cfg.trials) {
    if (attempt >= attempt_cap) {
      throw std::runtime_error("too many disconnected graph draws");
    }
    Rng rng = Rng::trial_stream(cfg.seed, attempt++);
    const WeightedGraph g =
        build_geometric_graph(cfg.n, cfg.sigma, cfg.kappa, rng, cfg.threshold);
    if (!is_connected(g)) {
      ++report.skipped_disconnected;
      continue;
    }
    const Vector truth = smooth_signal(g);
    const Vector noisy = add_noise(truth, cfg.noise_sigma, rng);
    const bool audit =
        report.connected_trials == 0 && !cfg.audit_trace_path.empty();
    const DenoiseResult denoised =
        denoise_tikhonov(g, noisy, cfg.tau, cfg.r, cfg.order, audit);
    if (audit) save_trace_csv(denoised.trace, cfg.audit_trace_path);

    report.mse_noisy += mean_squared_error(noisy, truth);
    report.mse_denoised += mean_squared_error(denoised.denoised, truth);
    report.total_messages += denoised.trace.message_count;
    report.total_scalars += denoised.trace.scalar_volume;
    ++report.connected_trials;
  }
  report.mse_noisy /= report.connected_trials;
  report.mse_denoised /= report.connected_trials;
  return report;
}

LassoExperimentReport run_lasso_experiment(const LassoExperimentConfig& cfg) {
  LassoExperimentReport report;
  report.config = cfg;

  std::uint64_t attempt = 0;
  const std::uint64_t attempt_cap =
      static_cast<std::uint64_t>(cfg.trials) * kMaxAttemptFactor;
  while (report.connected_trials < cfg.trials) {
    if (attempt >= attempt_cap) {
      throw std::runtime_error("too many disconnected graph draws");
    }
    Rng rng = Rng::trial_stream(cfg.seed, attempt++);
    const WeightedGraph g =
        build_geometric_graph(cfg.n, cfg.sigma, cfg.kappa, rng, cfg.threshold);
    if (!is_connected(g)) {
      ++report.skipped_disconnected;
      continue;
    }
    const Vector truth = piecewise_signal(g);
    const Vector noisy = add_noise(truth, cfg.noise_sigma, rng);
    report.mse_noisy += mean_squared_error(noisy, truth);

    const DenoiseResult tikhonov =
        denoise_tikhonov(g, noisy, cfg.tau, cfg.r, cfg.order);
    report.mse_tikhonov += mean_squared_error(tikhonov.denoised, truth);
    report.total_messages += tikhonov.trace.message_count;
    report.total_scalars += tikhonov.trace.scalar_volume;

    const double bound = lambda_max_bound(g);
    const WaveletFrame frame = sgwt_frame(cfg.scales, bound);
    const Index n = g.node_count;
    Vector mu(frame.eta() * n);
    mu.segment(0, n).setConstant(cfg.mu_scaling);
    mu.segment(n, cfg.scales * n).setConstant(cfg.mu_wavelet);

    // Exact-operator solution via the dense spectral oracle.
    const SpectralDecomposition d = eigendecompose(laplacian(g));
    const Matrix op = operator_matrix(d, frame.stacked);
    const IstaResult exact =
        ista_dense(op, noisy, mu, cfg.gamma, cfg.iterations);
    report.mse_lasso_exact +=
        mean_squared_error(op.transpose() * exact.coefficients, truth);

    LassoConfig lasso_cfg;
    lasso_cfg.mu = mu;
    lasso_cfg.gamma = cfg.gamma;
    lasso_cfg.max_iterations = cfg.iterations;
    if (report.connected_trials == 0) lasso_cfg.audit_trace_path = cfg.audit_trace_path;
    const LassoResult approx = distributed_lasso(g, noisy, frame, lasso_cfg, cfg.order);
    report.mse_lasso_approx += mean_squared_error(approx.denoised, truth);
    report.total_messages += approx.messages.edge_messages;
    report.total_scalars += approx.messages.scalar_volume;

    ++report.connected_trials;
  }
  report.mse_noisy /= report.connected_trials;
  report.mse_tikhonov /= report.connected_trials;
  report.mse_lasso_exact /= report.connected_trials;
  report.mse_lasso_approx /= report.connected_trials;
  return report;
}

InverseExperimentReport run_inverse_experiment(const InverseExperimentConfig& cfg) {
  InverseExperimentReport report;
  report.config = cfg;

  std::uint64_t attempt = 0;
  const std::uint64_t attempt_cap =
      static_cast<std::uint64_t>(cfg.trials) * kMaxAttemptFactor;
  while (report.connected_trials < cfg.trials) {
    if (attempt >= attempt_cap) {
      throw std::runtime_error("too many disconnected graph draws");
    }
    Rng rng = Rng::trial_stream(cfg.seed, attempt++);
    const WeightedGraph g =
        build_geometric_graph(cfg.n, cfg.sigma, cfg.kappa, rng, cfg.threshold);
    if (!is_connected(g)) {
      ++report.skipped_disconnected;
      continue;
    }
    const Vector truth = smooth_signal(g);
    const Multiplier blur = heat_multiplier(cfg.blur_time);

    const SpectralDecomposition d = eigendecompose(laplacian(g));
    const Vector blurred = apply_multiplier_exact(d, blur, truth);
    const Vector observed = add_noise(blurred, cfg.noise_sigma, rng);
    report.mse_observed += mean_squared_error(observed, truth);

    // Naive spectral inversion amplifies noise wherever the blur is small.
    const Multiplier naive{[blur](double lambda) { return 1.0 / blur(lambda); },
                           "naive-inverse"};
    report.mse_naive +=
        mean_squared_error(apply_multiplier_exact(d, naive, observed), truth);

    MultiplierUnion u;
    u.multipliers.push_back(inverse_filter_multiplier(blur, cfg.tau, cfg.r));
    const double bound = lambda_max_bound(g);
    const ChebyshevApprox approx = chebyshev_coefficients(u, bound, cfg.order);
    SimNetwork net(g, observed, approx);
    const bool audit =
        report.connected_trials == 0 && !cfg.audit_trace_path.empty();
    SimRun run = net.run_forward(audit);
    if (audit) save_trace_csv(run.trace, cfg.audit_trace_path);
    report.mse_regularized += mean_squared_error(run.output, truth);
    report.total_messages += run.trace.message_count;
    report.total_scalars += run.trace.scalar_volume;

    ++report.connected_trials;
  }
  report.mse_observed /= report.connected_trials;
  report.mse_naive /= report.connected_trials;
  report.mse_regularized /= report.connected_trials;
  return report;
}

WeightedGraph two_cluster_graph(int cluster_size, double intra_weight,
                                double inter_weight) {
  if (cluster_size < 2) throw std::invalid_argument("cluster needs at least two nodes");
  WeightedGraph g;
  g.node_count = 2 * cluster_size;
  for (int c = 0; c < 2; ++c) {
    const int base = c * cluster_size;
    for (int i = 0; i < cluster_size; ++i) {
      for (int j = i + 1; j < cluster_size; ++j) {
        g.edges.push_back({base + i, base + j, intra_weight});
      }
    }
  }
  g.edges.push_back({0, cluster_size, inter_weight});
  return g;
}

SslExperimentReport run_ssl_experiment(const SslExperimentConfig& cfg) {
  SslExperimentReport report;
  report.config = cfg;

  WeightedGraph g;
  std::vector<int> truth;
  if (!cfg.graph_path.empty()) {
    g = load_graph_json(cfg.graph_path);
    if (cfg.labels_path.empty()) {
      throw std::invalid_argument("external graph needs a labels file");
    }
    const LabelMatrix full = load_labels_csv(cfg.labels_path, g.node_count);
    truth = argmax_rows(full.y);
    for (Index i = 0; i < full.y.rows(); ++i) {
      if (full.y.row(i).sum() == 0.0) {
        throw std::invalid_argument("external labels must cover every node");
      }
    }
  } else {
    g = two_cluster_graph(cfg.cluster_size, cfg.intra_weight, cfg.inter_weight);
    truth.assign(static_cast<std::size_t>(g.node_count), 0);
    for (int i = cfg.cluster_size; i < g.node_count; ++i) {
      truth[static_cast<std::size_t>(i)] = 1;
    }
  }

  const int num_classes =
      1 + *std::max_element(truth.begin(), truth.end());
  std::vector<std::pair<int, int>> revealed;
  std::vector<int> seen(static_cast<std::size_t>(num_classes), 0);
  for (int i = 0; i < g.node_count; ++i) {
    const int cls = truth[static_cast<std::size_t>(i)];
    if (seen[static_cast<std::size_t>(cls)] < cfg.labels_per_class) {
      revealed.push_back({i, cls});
      ++seen[static_cast<std::size_t>(cls)];
    }
  }
  const LabelMatrix labels = make_labels(g.node_count, num_classes, revealed);

  const SslResult result = ssl_classify(g, labels, cfg.kernel, cfg.tau, cfg.order);
  report.total_messages = result.messages.edge_messages;
  report.total_scalars = result.messages.scalar_volume;

  std::vector<char> is_labeled(static_cast<std::size_t>(g.node_count), 0);
  for (const auto& [node, cls] : revealed) is_labeled[static_cast<std::size_t>(node)] = 1;
  for (int i = 0; i < g.node_count; ++i) {
    if (is_labeled[static_cast<std::size_t>(i)]) continue;
    ++report.evaluated;
    if (result.predictions[static_cast<std::size_t>(i)] ==
        truth[static_cast<std::size_t>(i)]) {
      ++report.correct;
    }
  }
  report.accuracy =
      report.evaluated > 0 ? static_cast<double>(report.correct) / report.evaluated : 1.0;

  // Agreement with the centralized dense solution of the same problem.
  const SslKernel kernel = ssl_kernel(g, cfg.kernel);
  Matrix p_dense;
  if (kernel.spectral) {
    const SpectralDecomposition d = eigendecompose(kernel.base);
    Vector gvals(d.size());
    for (Index l = 0; l < d.size(); ++l) {
      gvals[l] = kernel.spectral->fn(std::max(d.eigenvalues[l], 0.0));
    }
    p_dense = d.eigenvectors * gvals.asDiagonal() * d.eigenvectors.transpose();
  } else if (kernel.similarity_scale.size() > 0) {
    p_dense = kernel.similarity_scale.asDiagonal() * kernel.base.to_dense() *
              kernel.similarity_scale.cwiseInverse().asDiagonal();
  } else {
    p_dense = kernel.base.to_dense();
  }
  const Matrix dense_scores = ssl_solve_dense(p_dense, labels.y, cfg.tau);
  const std::vector<int> dense_pred = argmax_rows(dense_scores);
  int agree = 0;
  for (int i = 0; i < g.node_count; ++i) {
    if (dense_pred[static_cast<std::size_t>(i)] ==
        result.predictions[static_cast<std::size_t>(i)]) {
      ++agree;
    }
  }
  report.dense_agreement = static_cast<double>(agree) / g.node_count;
  return report;
}

CompareExperimentReport run_compare_experiment(const CompareExperimentConfig& cfg) {
  CompareExperimentReport report;
  report.config = cfg;

  // First connected draw, scanning seeds deterministically.
  WeightedGraph g;
  std::uint64_t attempt = 0;
  for (;; ++attempt) {
    if (attempt >= 1000) throw std::runtime_error("too many disconnected graph draws");
    g = build_geometric_graph(cfg.n, cfg.sigma, cfg.kappa, cfg.seed + attempt,
                              cfg.threshold);
    if (is_connected(g)) break;
  }
  report.graph_seed_used = cfg.seed + attempt;

  Rng rng = Rng::trial_stream(cfg.seed, 0xF0);
  Vector f(cfg.n);
  for (Index i = 0; i < f.size(); ++i) f[i] = rng.uniform(-10.0, 10.0);

  const SparseMatrix l_norm = normalized_laplacian(g);
  const SparseMatrix l = laplacian(g);

  report.matrix_names = {"lnorm", "l2", "ld_inv", "rw3"};
  report.comparisons.push_back(convergence_compare(l_norm, cfg.tau, f, cfg.k_max));
  report.comparisons.push_back(
      convergence_compare(l.multiply(l), cfg.tau, f, cfg.k_max));
  report.comparisons.push_back(
      convergence_compare(random_walk_laplacian(g), cfg.tau, f, cfg.k_max));

  // Three-step random walk: (2I - L_norm)^{-3}, dense.
  const SpectralDecomposition d = eigendecompose(l_norm);
  Vector gvals(d.size());
  for (Index i = 0; i < d.size(); ++i) {
    gvals[i] = std::pow(2.0 - std::max(d.eigenvalues[i], 0.0), -3);
  }
  const Matrix p_rw =
      d.eigenvectors * gvals.asDiagonal() * d.eigenvectors.transpose();
  report.comparisons.push_back(
      convergence_compare(SparseMatrix::from_dense(p_rw), cfg.tau, f, cfg.k_max));
  return report;
}

void save_comparison_csv(const SolverComparison& cmp, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "K,err_cheb,err_jacobi,err_jacobi_accel\n";
  char buf[256];
  for (std::size_t k = 0; k < cmp.err_multiplier.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g\n", k,
                  cmp.err_multiplier[k], cmp.err_jacobi[k], cmp.err_jacobi_accel[k]);
    out << buf;
  }
}

namespace {

nlohmann::json threshold_json(EdgeThreshold mode) {
  return mode == EdgeThreshold::kWeight ? "weight" : "distance";
}

EdgeThreshold threshold_from_json(const nlohmann::json& j, EdgeThreshold fallback) {
  if (!j.contains("threshold")) return fallback;
  const std::string s = j["threshold"].get<std::string>();
  if (s == "weight") return EdgeThreshold::kWeight;
  if (s == "distance") return EdgeThreshold::kDistance;
  throw std::invalid_argument("threshold must be 'weight' or 'distance'");
}

template <class T>
void maybe(const nlohmann::json& j, const char* key, T& value) {
  if (j.contains(key)) value = j[key].get<T>();
}

nlohmann::json kernel_spec_json(const SslKernelSpec& spec) {
  static const char* names[] = {"laplacian_power", "normalized_power",
                                "random_walk_laplacian", "diffusion",
                                "inverse_cosine", "random_walk", "k_scaling"};
  return {{"kind", names[static_cast<int>(spec.kind)]},
          {"r", spec.r},
          {"sigma", spec.sigma},
          {"gamma", spec.gamma},
          {"raw_recurrence", spec.raw_recurrence}};
}

SslKernelSpec kernel_spec_from_json(const nlohmann::json& j) {
  SslKernelSpec spec;
  if (j.contains("kind")) {
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "laplacian_power") spec.kind = SslKernelKind::kLaplacianPower;
    else if (kind == "normalized_power") spec.kind = SslKernelKind::kNormalizedPower;
    else if (kind == "random_walk_laplacian") spec.kind = SslKernelKind::kRandomWalkLaplacian;
    else if (kind == "diffusion") spec.kind = SslKernelKind::kDiffusion;
    else if (kind == "inverse_cosine") spec.kind = SslKernelKind::kInverseCosine;
    else if (kind == "random_walk") spec.kind = SslKernelKind::kRandomWalk;
    else if (kind == "k_scaling") spec.kind = SslKernelKind::kKScaling;
    else throw std::invalid_argument("unknown kernel kind: " + kind);
  }
  maybe(j, "r", spec.r);
  maybe(j, "sigma", spec.sigma);
  maybe(j, "gamma", spec.gamma);
  maybe(j, "raw_recurrence", spec.raw_recurrence);
  return spec;
}

}  // namespace

std::string report_to_json(const TikhonovExperimentReport& report) {
  const auto& c = report.config;
  nlohmann::json j = {
      {"version", kVersion},
      {"command", "tikhonov"},
      {"config",
       {{"n", c.n},
        {"sigma", c.sigma},
        {"kappa", c.kappa},
        {"threshold", threshold_json(c.threshold)},
        {"noise_sigma", c.noise_sigma},
        {"tau", c.tau},
        {"r", c.r},
        {"K", c.order},
        {"trials", c.trials},
        {"seed", c.seed}}},
      {"results",
       {{"mse_noisy", report.mse_noisy},
        {"mse_denoised", report.mse_denoised},
        {"connected_trials", report.connected_trials},
        {"skipped_disconnected", report.skipped_disconnected},
        {"message_totals",
         {{"edge_messages", report.total_messages},
          {"scalar_volume", report.total_scalars}}}}}};
  return j.dump(2);
}

std::string report_to_json(const LassoExperimentReport& report) {
  const auto& c = report.config;
  nlohmann::json j = {
      {"version", kVersion},
      {"command", "lasso"},
      {"config",
       {{"n", c.n},
        {"sigma", c.sigma},
        {"kappa", c.kappa},
        {"threshold", threshold_json(c.threshold)},
        {"noise_sigma", c.noise_sigma},
        {"tau", c.tau},
        {"r", c.r},
        {"K", c.order},
        {"J", c.scales},
        {"gamma", c.gamma},
        {"mu_wavelet", c.mu_wavelet},
        {"mu_scaling", c.mu_scaling},
        {"iterations", c.iterations},
        {"trials", c.trials},
        {"seed", c.seed}}},
      {"results",
       {{"mse_noisy", report.mse_noisy},
        {"mse_tikhonov", report.mse_tikhonov},
        {"mse_lasso_exact", report.mse_lasso_exact},
        {"mse_lasso_approx", report.mse_lasso_approx},
        {"connected_trials", report.connected_trials},
        {"skipped_disconnected", report.skipped_disconnected},
        {"message_totals",
         {{"edge_messages", report.total_messages},
          {"scalar_volume", report.total_scalars}}}}}};
  return j.dump(2);
}

std::string report_to_json(const InverseExperimentReport& report) {
  const auto& c = report.config;
  nlohmann::json j = {
      {"version", kVersion},
      {"command", "inverse"},
      {"config",
       {{"n", c.n},
        {"sigma", c.sigma},
        {"kappa", c.kappa},
        {"threshold", threshold_json(c.threshold)},
        {"blur_time", c.blur_time},
        {"noise_sigma", c.noise_sigma},
        {"tau", c.tau},
        {"r", c.r},
        {"K", c.order},
        {"trials", c.trials},
        {"seed", c.seed}}},
      {"results",
       {{"mse_observed", report.mse_observed},
        {"mse_naive", report.mse_naive},
        {"mse_regularized", report.mse_regularized},
        {"connected_trials", report.connected_trials},
        {"skipped_disconnected", report.skipped_disconnected},
        {"message_totals",
         {{"edge_messages", report.total_messages},
          {"scalar_volume", report.total_scalars}}}}}};
  return j.dump(2);
}

std::string report_to_json(const SslExperimentReport& report) {
  const auto& c = report.config;
  nlohmann::json j = {
      {"version", kVersion},
      {"command", "ssl"},
      {"config",
       {{"cluster_size", c.cluster_size},
        {"intra_weight", c.intra_weight},
        {"inter_weight", c.inter_weight},
        {"labels_per_class", c.labels_per_class},
        {"kernel", kernel_spec_json(c.kernel)},
        {"tau", c.tau},
        {"K", c.order},
        {"seed", c.seed},
        {"graph_path", c.graph_path},
        {"labels_path", c.labels_path}}},
      {"results",
       {{"accuracy", report.accuracy},
        {"evaluated", report.evaluated},
        {"correct", report.correct},
        {"dense_agreement", report.dense_agreement},
        {"message_totals",
         {{"edge_messages", report.total_messages},
          {"scalar_volume", report.total_scalars}}}}}};
  return j.dump(2);
}

std::string report_to_json(const CompareExperimentReport& report) {
  const auto& c = report.config;
  nlohmann::json curves = nlohmann::json::object();
  for (std::size_t i = 0; i < report.matrix_names.size(); ++i) {
    const SolverComparison& cmp = report.comparisons[i];
    curves[report.matrix_names[i]] = {
        {"err_cheb", cmp.err_multiplier},
        {"err_jacobi", cmp.err_jacobi},
        {"err_jacobi_accel", cmp.err_jacobi_accel},
        {"iteration_radius", cmp.iteration_radius},
        {"accel_rho_clamped", cmp.accel_rho_clamped}};
  }
  nlohmann::json j = {{"version", kVersion},
                      {"command", "compare"},
                      {"config",
                       {{"n", c.n},
                        {"sigma", c.sigma},
                        {"kappa", c.kappa},
                        {"threshold", threshold_json(c.threshold)},
                        {"tau", c.tau},
                        {"K_max", c.k_max},
                        {"seed", c.seed}}},
                      {"graph_seed_used", report.graph_seed_used},
                      {"results", curves}};
  return j.dump(2);
}

TikhonovExperimentConfig tikhonov_config_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  TikhonovExperimentConfig c;
  maybe(j, "n", c.n);
  maybe(j, "sigma", c.sigma);
  maybe(j, "kappa", c.kappa);
  c.threshold = threshold_from_json(j, c.threshold);
  maybe(j, "noise_sigma", c.noise_sigma);
  maybe(j, "tau", c.tau);
  maybe(j, "r", c.r);
  maybe(j, "K", c.order);
  maybe(j, "trials", c.trials);
  maybe(j, "seed", c.seed);
  return c;
}

LassoExperimentConfig lasso_config_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  LassoExperimentConfig c;
  maybe(j, "n", c.n);
  maybe(j, "sigma", c.sigma);
  maybe(j, "kappa", c.kappa);
  c.threshold = threshold_from_json(j, c.threshold);
  maybe(j, "noise_sigma", c.noise_sigma);
  maybe(j, "tau", c.tau);
  maybe(j, "r", c.r);
  maybe(j, "K", c.order);
  maybe(j, "J", c.scales);
  maybe(j, "gamma", c.gamma);
  maybe(j, "mu_wavelet", c.mu_wavelet);
  maybe(j, "mu_scaling", c.mu_scaling);
  maybe(j, "iterations", c.iterations);
  maybe(j, "trials", c.trials);
  maybe(j, "seed", c.seed);
  return c;
}

InverseExperimentConfig inverse_config_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  InverseExperimentConfig c;
  maybe(j, "n", c.n);
  maybe(j, "sigma", c.sigma);
  maybe(j, "kappa", c.kappa);
  c.threshold = threshold_from_json(j, c.threshold);
  maybe(j, "blur_time", c.blur_time);
  maybe(j, "noise_sigma", c.noise_sigma);
  maybe(j, "tau", c.tau);
  maybe(j, "r", c.r);
  maybe(j, "K", c.order);
  maybe(j, "trials", c.trials);
  maybe(j, "seed", c.seed);
  return c;
}

SslExperimentConfig ssl_config_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SslExperimentConfig c;
  maybe(j, "cluster_size", c.cluster_size);
  maybe(j, "intra_weight", c.intra_weight);
  maybe(j, "inter_weight", c.inter_weight);
  maybe(j, "labels_per_class", c.labels_per_class);
  if (j.contains("kernel")) c.kernel = kernel_spec_from_json(j["kernel"]);
  maybe(j, "tau", c.tau);
  maybe(j, "K", c.order);
  maybe(j, "seed", c.seed);
  maybe(j, "graph_path", c.graph_path);
  maybe(j, "labels_path", c.labels_path);
  return c;
}

CompareExperimentConfig compare_config_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  CompareExperimentConfig c;
  maybe(j, "n", c.n);
  maybe(j, "sigma", c.sigma);
  maybe(j, "kappa", c.kappa);
  c.threshold = threshold_from_json(j, c.threshold);
  maybe(j, "tau", c.tau);
  maybe(j, "K_max", c.k_max);
  maybe(j, "seed", c.seed);
  return c;
}

}  // namespace gcheb
