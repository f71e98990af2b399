// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "graphcheb/experiments.hpp"
#include "graphcheb/ssl.hpp"
#include "graphcheb/verify.hpp"

using namespace gcheb;

namespace {

int failures = 0;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int criterion, bool pass, const std::string& detail, double elapsed,
            double limit_seconds) {
  const bool in_time = limit_seconds <= 0.0 || elapsed <= limit_seconds;
  if (!pass || !in_time) ++failures;
  std::printf("criterion %2d: %s  [%5.1fs]  %s%s\n", criterion,
              (pass && in_time) ? "PASS" : "FAIL", elapsed, detail.c_str(),
              in_time ? "" : "  (over time limit)");
  std::fflush(stdout);
}

std::string failing_names(const std::vector<CheckResult>& results) {
  std::string out;
  for (const CheckResult& r : results) {
    if (!r.pass) out += " [" + r.name + ": " + r.detail + "]";
  }
  return out;
}

}  // namespace

int main() {
  const std::uint64_t seed = 20260809;

  {  // 1. Distributed == centralized to 1e-12 on 100 random cases.
    Stopwatch timer;
    const auto results = check_distributed_equivalence(100, seed, 1e-12, 100);
    report(1, all_pass(results),
           "forward/adjoint/gram vs centralized, 100 cases, max-abs <= 1e-12" +
               failing_names(results),
           timer.seconds(), 60.0);
  }

  {  // 2. Exact message counts on 20 random graphs.
    Stopwatch timer;
    const auto results = check_message_counts(20, seed + 1);
    report(2, all_pass(results),
           "2K|E| forward, 2K|E| length-eta adjoint, 4K|E| gram, integer equality" +
               failing_names(results),
           timer.seconds(), 0.0);
  }

  {  // 3. Spectral-norm error bound via dense SVD on 20 cases.
    Stopwatch timer;
    const auto results = check_spectral_bound(20, seed + 2);
    report(3, all_pass(results),
           "||Phi - Phi~||_2 <= B(K) sqrt(eta N) + 1e-8, 20 cases" +
               failing_names(results),
           timer.seconds(), 60.0);
  }

  {  // 4. Heat-kernel residual decay on [0, 10].
    Stopwatch timer;
    const CheckResult r = check_kernel_decay();
    report(4, r.pass, "strictly decreasing over K in {5,10,20,40}, B(40) <= 1e-8; " +
                          r.detail,
           timer.seconds(), 0.0);
  }

  {  // 5. Smooth-signal denoising reproduction.
    Stopwatch timer;
    TikhonovExperimentConfig cfg;
    cfg.trials = 100;
    cfg.seed = seed;
    const TikhonovExperimentReport rep = run_tikhonov_experiment(cfg);
    const bool pass = std::abs(rep.mse_noisy - 0.250) <= 0.01 &&
                      std::abs(rep.mse_denoised - 0.013) <= 0.005;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "mse_noisy=%.4f (0.250 +/- 0.01), mse_denoised=%.4f (0.013 +/- "
                  "0.005), %d connected trials",
                  rep.mse_noisy, rep.mse_denoised, rep.connected_trials);
    report(5, pass, buf, timer.seconds(), 300.0);
  }

  {  // 6. Piecewise-signal wavelet denoising reproduction.
    Stopwatch timer;
    LassoExperimentConfig cfg;
    cfg.trials = 50;
    cfg.seed = seed;
    const LassoExperimentReport rep = run_lasso_experiment(cfg);
    const bool ordering = rep.mse_noisy > rep.mse_tikhonov &&
                          rep.mse_tikhonov > rep.mse_lasso_exact &&
                          rep.mse_tikhonov > rep.mse_lasso_approx;
    const bool tikhonov_band = std::abs(rep.mse_tikhonov - 0.098) <= 0.01;
    const bool lasso_band = rep.mse_lasso_exact >= 0.06 && rep.mse_lasso_exact <= 0.11 &&
                            rep.mse_lasso_approx >= 0.06 && rep.mse_lasso_approx <= 0.11;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "mse: noisy=%.4f tikhonov=%.4f (0.098 +/- 0.01) exact=%.4f "
                  "approx=%.4f (both in [0.06, 0.11]), ordering %s",
                  rep.mse_noisy, rep.mse_tikhonov, rep.mse_lasso_exact,
                  rep.mse_lasso_approx, ordering ? "holds" : "BROKEN");
    report(6, ordering && tikhonov_band && lasso_band, buf, timer.seconds(), 1800.0);
  }

  {  // 7. Lasso perturbation bound on 20 small instances.
    Stopwatch timer;
    const auto results = check_lasso_bound(20, seed + 3);
    report(7, all_pass(results),
           "||op~* a~ - op* a||^2 <= (||y||^3/min mu) ||op~ - op||_2, 20 instances" +
               failing_names(results),
           timer.seconds(), 300.0);
  }

  {  // 8. Solver comparison at N = 200.
    Stopwatch timer;
    CompareExperimentConfig cfg;
    cfg.seed = seed;
    const CompareExperimentReport rep = run_compare_experiment(cfg);
    bool pass = true;
    std::string detail;
    // The multiplier method stays below both baselines; comparisons carry a
    // 1e-12 absolute slack so that agreement at the double-precision floor
    // (errors ~1e-13 on ||f|| ~ 80) does not read as a regression.
    for (std::size_t m = 0; m < 3; ++m) {
      const SolverComparison& cmp = rep.comparisons[m];
      for (int k = 5; k <= cfg.k_max; ++k) {
        if (!(cmp.err_multiplier[k] < cmp.err_jacobi[k] + 1e-12 &&
              cmp.err_multiplier[k] < cmp.err_jacobi_accel[k] + 1e-12)) {
          pass = false;
          detail += " [" + rep.matrix_names[m] + " K=" + std::to_string(k) + "]";
        }
      }
    }
    const SolverComparison& rw = rep.comparisons[3];
    const bool rw_diverges =
        rw.iteration_radius >= 1.0 && rw.err_jacobi[40] > rw.err_jacobi[0];
    if (!rw_diverges) pass = false;
    char buf[220];
    std::snprintf(buf, sizeof(buf),
                  "multiplier below both baselines for K in [5,40] on lnorm/l2/ld_inv%s; "
                  "rw3 radius=%.3f (>=1), jacobi err K40/K0 = %.2e/%.2e",
                  detail.c_str(), rw.iteration_radius, rw.err_jacobi[40],
                  rw.err_jacobi[0]);
    report(8, pass, buf, timer.seconds(), 120.0);
  }

  {  // 9. Closed-form regularization solution on 50 random instances.
    Stopwatch timer;
    const auto results = check_tikhonov_closed_form(50, seed + 4);
    report(9, all_pass(results),
           "exact multiplier equals dense solve of (tau I + 2 L^r) f = tau y to 1e-9" +
               failing_names(results),
           timer.seconds(), 0.0);
  }

  {  // 10. Semi-supervised classification sanity.
    Stopwatch timer;
    bool pass = true;
    std::string detail;

    // Two 6-cliques joined by one weak edge: every node classified with its
    // clique.
    {
      const WeightedGraph g = two_cluster_graph(6, 1.0, 0.01);
      const LabelMatrix labels = make_labels(g.node_count, 2, {{0, 0}, {6, 1}});
      SslKernelSpec spec;
      spec.kind = SslKernelKind::kLaplacianPower;
      const SslResult r = ssl_classify(g, labels, spec, 1.0, 20);
      for (int i = 0; i < g.node_count; ++i) {
        if (r.predictions[static_cast<std::size_t>(i)] != (i < 6 ? 0 : 1)) pass = false;
      }
      detail += pass ? "two-clique 100%" : "two-clique misclassified";
    }

    // Fixed 30-node instance: distributed predictions match the dense solve
    // by K = 30.
    {
      Rng rng(seed + 5);
      const WeightedGraph g = random_connected_graph(rng, 30, 30);
      const LabelMatrix labels =
          make_labels(g.node_count, 3, {{0, 0}, {7, 1}, {15, 2}});
      SslKernelSpec spec;
      spec.kind = SslKernelKind::kLaplacianPower;
      const Matrix dense = ssl_solve_dense(laplacian(g).to_dense(), labels.y, 1.0);
      const std::vector<int> oracle = argmax_rows(dense);
      const SslResult at30 = ssl_classify(g, labels, spec, 1.0, 30);
      const bool agree = at30.predictions == oracle;
      if (!agree) pass = false;
      detail += agree ? "; K=30 matches dense solve" : "; K=30 disagrees with dense";
    }
    report(10, pass, detail, timer.seconds(), 0.0);
  }

  std::printf("%s (%d failure%s)\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              failures, failures == 1 ? "" : "s");
  return failures == 0 ? 0 : 1;
}
