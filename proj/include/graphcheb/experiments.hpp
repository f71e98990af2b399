#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphcheb/graph.hpp"
#include "graphcheb/jacobi.hpp"
#include "graphcheb/ssl.hpp"
#include "graphcheb/types.hpp"

namespace gcheb {

inline constexpr const char* kVersion = "graphcheb 0.1.0";

// Monte-Carlo experiments draw graphs until the requested number of
// connected samples is reached; disconnected draws are skipped and counted.

struct TikhonovExperimentConfig {
  int n = 500;
  double sigma = 0.074;
  double kappa = 0.600;
  EdgeThreshold threshold = EdgeThreshold::kWeight;
  double noise_sigma = 0.5;
  double tau = 1.0;
  int r = 1;
  int order = 15;
  int trials = 100;
  std::uint64_t seed = 42;
  // When set, the first connected trial's forward run is fully traced and
  // exported to this CSV path.
  std::string audit_trace_path;
};

struct TikhonovExperimentReport {
  TikhonovExperimentConfig config;
  double mse_noisy = 0.0;
  double mse_denoised = 0.0;
  int connected_trials = 0;
  int skipped_disconnected = 0;
  long long total_messages = 0;
  long long total_scalars = 0;
};

TikhonovExperimentReport run_tikhonov_experiment(const TikhonovExperimentConfig& cfg);

struct LassoExperimentConfig {
  int n = 500;
  double sigma = 0.074;
  double kappa = 0.600;
  EdgeThreshold threshold = EdgeThreshold::kWeight;
  double noise_sigma = 0.5;
  double tau = 1.0;  // Tikhonov baseline
  int r = 1;
  int order = 15;
  int scales = 6;
  double gamma = 0.2;
  double mu_wavelet = 0.75;
  double mu_scaling = 0.01;
  int iterations = 300;
  int trials = 50;
  std::uint64_t seed = 42;
  std::string audit_trace_path;  // first trial's cached wavelet-analysis trace
};

struct LassoExperimentReport {
  LassoExperimentConfig config;
  double mse_noisy = 0.0;
  double mse_tikhonov = 0.0;
  double mse_lasso_exact = 0.0;
  double mse_lasso_approx = 0.0;
  int connected_trials = 0;
  int skipped_disconnected = 0;
  long long total_messages = 0;
  long long total_scalars = 0;
};

LassoExperimentReport run_lasso_experiment(const LassoExperimentConfig& cfg);

struct InverseExperimentConfig {
  int n = 500;
  double sigma = 0.074;
  double kappa = 0.600;
  EdgeThreshold threshold = EdgeThreshold::kWeight;
  double blur_time = 2.0;     // heat-kernel blur
  double noise_sigma = 0.05;
  double tau = 1.0;
  int r = 1;
  int order = 20;
  int trials = 20;
  std::uint64_t seed = 42;
  std::string audit_trace_path;  // first trial's recovery-run trace
};

struct InverseExperimentReport {
  InverseExperimentConfig config;
  double mse_observed = 0.0;
  double mse_naive = 0.0;
  double mse_regularized = 0.0;
  int connected_trials = 0;
  int skipped_disconnected = 0;
  long long total_messages = 0;
  long long total_scalars = 0;
};

InverseExperimentReport run_inverse_experiment(const InverseExperimentConfig& cfg);

struct SslExperimentConfig {
  // Synthetic benchmark: two dense clusters bridged by one weak edge.
  int cluster_size = 15;
  double intra_weight = 1.0;
  double inter_weight = 0.01;
  int labels_per_class = 1;
  SslKernelSpec kernel;
  double tau = 1.0;
  int order = 30;
  std::uint64_t seed = 42;
  // Optional external instance; labels CSV holds ground truth of which the
  // first labels_per_class per class are revealed.
  std::string graph_path;
  std::string labels_path;
};

struct SslExperimentReport {
  SslExperimentConfig config;
  double accuracy = 0.0;
  int evaluated = 0;
  int correct = 0;
  double dense_agreement = 0.0;  // prediction match rate vs the dense solve
  long long total_messages = 0;
  long long total_scalars = 0;
};

SslExperimentReport run_ssl_experiment(const SslExperimentConfig& cfg);

// Two dense clusters of `cluster_size` nodes joined by a single weak edge.
WeightedGraph two_cluster_graph(int cluster_size, double intra_weight,
                                double inter_weight);

struct CompareExperimentConfig {
  int n = 200;
  double sigma = 0.125;
  double kappa = 0.600;
  EdgeThreshold threshold = EdgeThreshold::kWeight;
  double tau = 0.5;
  int k_max = 40;
  std::uint64_t seed = 42;
};

struct CompareExperimentReport {
  CompareExperimentConfig config;
  std::vector<std::string> matrix_names;
  std::vector<SolverComparison> comparisons;
  std::uint64_t graph_seed_used = 0;
};

CompareExperimentReport run_compare_experiment(const CompareExperimentConfig& cfg);

// CSV with rows "K,err_cheb,err_jacobi,err_jacobi_accel" at full precision.
void save_comparison_csv(const SolverComparison& cmp, const std::string& path);

// JSON plumbing for the CLI: configs read with defaults, reports echo the
// configuration verbatim plus the version string.
std::string report_to_json(const TikhonovExperimentReport& report);
std::string report_to_json(const LassoExperimentReport& report);
std::string report_to_json(const InverseExperimentReport& report);
std::string report_to_json(const SslExperimentReport& report);
std::string report_to_json(const CompareExperimentReport& report);

TikhonovExperimentConfig tikhonov_config_from_json(const std::string& text);
LassoExperimentConfig lasso_config_from_json(const std::string& text);
InverseExperimentConfig inverse_config_from_json(const std::string& text);
SslExperimentConfig ssl_config_from_json(const std::string& text);
CompareExperimentConfig compare_config_from_json(const std::string& text);

}  // namespace gcheb
