#include "graphcheb/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "graphcheb/cheb.hpp"
#include "graphcheb/distsim.hpp"
#include "graphcheb/filters.hpp"
#include "graphcheb/lasso.hpp"
#include "graphcheb/wavelets.hpp"

namespace gcheb {

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

WeightedGraph random_connected_graph(Rng& rng, int min_nodes, int max_nodes) {
  const int n = min_nodes + static_cast<int>(rng.below(
                                static_cast<std::uint64_t>(max_nodes - min_nodes + 1)));
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)],
              order[rng.below(static_cast<std::uint64_t>(i + 1))]);
  }

  std::set<std::pair<int, int>> picked;
  WeightedGraph g;
  g.node_count = n;
  auto add_edge = [&](int a, int b, double w) {
    if (a > b) std::swap(a, b);
    if (a == b) return;
    if (picked.insert({a, b}).second) g.edges.push_back({a, b, w});
  };
  // Spanning chain keeps the sample connected.
  for (int i = 0; i + 1 < n; ++i) {
    add_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i + 1)],
             rng.uniform(0.5, 1.5));
  }
  const double extra_prob = std::min(0.8, 3.0 / n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform() < extra_prob) add_edge(i, j, rng.uniform(0.1, 2.0));
    }
  }
  return g;
}

MultiplierUnion random_union(Rng& rng, Index eta, double lambda_max) {
  MultiplierUnion u;
  for (Index j = 0; j < eta; ++j) {
    switch (rng.below(4)) {
      case 0: {
        const double t = rng.uniform(0.2, 3.0) / std::max(lambda_max, 1.0);
        u.multipliers.push_back(heat_multiplier(t));
        break;
      }
      case 1: {
        const double tau = rng.uniform(0.3, 3.0);
        u.multipliers.push_back(tikhonov_multiplier(tau, 1 + static_cast<int>(rng.below(2))));
        break;
      }
      case 2: {
        const double center = rng.uniform(0.0, lambda_max);
        const double width = rng.uniform(0.1, 0.5) * lambda_max;
        u.multipliers.push_back(
            {[center, width](double x) {
               const double z = (x - center) / width;
               return std::exp(-z * z);
             },
             "bump"});
        break;
      }
      default: {
        const double a = rng.uniform(-1.0, 1.0);
        const double b = rng.uniform(-1.0, 1.0) / std::max(lambda_max, 1.0);
        const double c = rng.uniform(-1.0, 1.0) / std::max(lambda_max * lambda_max, 1.0);
        u.multipliers.push_back(
            {[a, b, c](double x) { return a + b * x + c * x * x; }, "poly"});
        break;
      }
    }
  }
  return u;
}

namespace {

Vector random_vector(Rng& rng, Index n, double lo = -1.0, double hi = 1.0) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = rng.uniform(lo, hi);
  return v;
}

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(3);
  out << v;
  return out.str();
}

}  // namespace

std::vector<CheckResult> check_distributed_equivalence(int cases, std::uint64_t seed,
                                                       double tol, int max_nodes) {
  std::vector<CheckResult> results;
  for (int c = 0; c < cases; ++c) {
    Rng rng = Rng::trial_stream(seed, static_cast<std::uint64_t>(c));
    const WeightedGraph g = random_connected_graph(rng, 4, max_nodes);
    const Index n = g.node_count;
    const Index eta = 1 + static_cast<Index>(rng.below(8));
    const int order = 1 + static_cast<int>(rng.below(30));
    const double bound = lambda_max_bound(g);
    const MultiplierUnion u = random_union(rng, eta, bound);
    const ChebyshevApprox approx = chebyshev_coefficients(u, bound, order);
    const SparseMatrix l = laplacian(g);
    const Vector f = random_vector(rng, n);
    const Vector a = random_vector(rng, eta * n);

    SimNetwork net(g, f, approx);
    const double err_fwd =
        (net.run_forward().output - apply_approx(l, approx, f)).cwiseAbs().maxCoeff();
    const double err_adj = (net.run_adjoint(a).output - apply_adjoint_approx(l, approx, a))
                               .cwiseAbs()
                               .maxCoeff();
    const double err_gram =
        (net.run_gram().output - apply_gram_approx(l, approx, f)).cwiseAbs().maxCoeff();
    const double worst = std::max({err_fwd, err_adj, err_gram});

    CheckResult r;
    r.name = "equivalence case " + std::to_string(c);
    r.pass = worst <= tol;
    r.detail = "max |distributed - centralized| = " + format_double(worst);
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<CheckResult> check_message_counts(int graphs, std::uint64_t seed) {
  std::vector<CheckResult> results;
  for (int c = 0; c < graphs; ++c) {
    Rng rng = Rng::trial_stream(seed, static_cast<std::uint64_t>(c));
    const WeightedGraph g = random_connected_graph(rng, 4, 40);
    const Index eta = 1 + static_cast<Index>(rng.below(5));
    const int order = 1 + static_cast<int>(rng.below(20));
    const double bound = lambda_max_bound(g);
    const ChebyshevApprox approx =
        chebyshev_coefficients(random_union(rng, eta, bound), bound, order);
    const Vector f = random_vector(rng, g.node_count);
    const Vector a = random_vector(rng, eta * g.node_count);

    SimNetwork net(g, f, approx);
    const long long edges = g.edge_count();
    const long long expected = 2LL * order * edges;

    SimRun fwd = net.run_forward(true);
    SimRun adj = net.run_adjoint(a, true);
    SimRun gram = net.run_gram(true);

    std::set<std::pair<int, int>> edge_set;
    for (const GraphEdge& e : g.edges) {
      edge_set.insert({e.u, e.v});
      edge_set.insert({e.v, e.u});
    }
    bool local = true;
    for (const RoundTrace* trace : {&fwd.trace, &adj.trace, &gram.trace}) {
      for (const TraceEntry& e : trace->entries) {
        if (!edge_set.count({e.sender, e.receiver})) local = false;
      }
    }

    const bool pass = fwd.trace.message_count == expected &&
                      fwd.trace.scalar_volume == expected &&
                      adj.trace.message_count == expected &&
                      adj.trace.scalar_volume == expected * eta &&
                      gram.trace.message_count == 2 * expected &&
                      gram.trace.scalar_volume == 2 * expected && local;

    CheckResult r;
    r.name = "message counts graph " + std::to_string(c);
    r.pass = pass;
    r.detail = "K=" + std::to_string(order) + " |E|=" + std::to_string(edges) +
               " forward=" + std::to_string(fwd.trace.message_count) +
               " adjoint=" + std::to_string(adj.trace.message_count) +
               " gram=" + std::to_string(gram.trace.message_count) +
               (local ? "" : " NONLOCAL");
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<CheckResult> check_spectral_bound(int cases, std::uint64_t seed) {
  std::vector<CheckResult> results;
  for (int c = 0; c < cases; ++c) {
    Rng rng = Rng::trial_stream(seed, static_cast<std::uint64_t>(c));
    const WeightedGraph g = random_connected_graph(rng, 5, 60);
    const Index eta = 1 + static_cast<Index>(rng.below(4));
    const int order = 2 + static_cast<int>(rng.below(24));
    const double bound = lambda_max_bound(g);
    const MultiplierUnion u = random_union(rng, eta, bound);
    const ChebyshevApprox approx = chebyshev_coefficients(u, bound, order);
    const SpectralDecomposition d = eigendecompose(laplacian(g));
    const SpectralBoundCheck check = verify_spectral_bound(d, u, approx);

    CheckResult r;
    r.name = "spectral bound case " + std::to_string(c);
    r.pass = check.lhs <= check.rhs + 1e-8;
    r.detail = "lhs=" + format_double(check.lhs) + " rhs=" + format_double(check.rhs);
    results.push_back(std::move(r));
  }
  return results;
}

CheckResult check_kernel_decay() {
  MultiplierUnion u;
  u.multipliers.push_back(heat_multiplier(1.0));
  const double lambda_max = 10.0;
  std::vector<double> residuals;
  for (int order : {5, 10, 20, 40}) {
    const ChebyshevApprox approx = chebyshev_coefficients(u, lambda_max, order);
    residuals.push_back(residual_sup(u, approx, 5000));
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < residuals.size(); ++i) {
    if (residuals[i] >= residuals[i - 1]) decreasing = false;
  }
  CheckResult r;
  r.name = "heat kernel residual decay";
  r.pass = decreasing && residuals.back() <= 1e-8;
  r.detail = "B(5..40) = " + format_double(residuals[0]) + ", " +
             format_double(residuals[1]) + ", " + format_double(residuals[2]) + ", " +
             format_double(residuals[3]);
  return r;
}

std::vector<CheckResult> check_lasso_bound(int cases, std::uint64_t seed) {
  std::vector<CheckResult> results;
  for (int c = 0; c < cases; ++c) {
    Rng rng = Rng::trial_stream(seed, static_cast<std::uint64_t>(c));
    const WeightedGraph g = random_connected_graph(rng, 10, 30);
    const Index n = g.node_count;
    const int scales = 2 + static_cast<int>(rng.below(3));
    const int order = 3 + static_cast<int>(rng.below(8));
    const double bound = lambda_max_bound(g);
    const WaveletFrame frame = sgwt_frame(scales, bound);
    const ChebyshevApprox approx =
        chebyshev_coefficients(frame.stacked, frame.lambda_max, order);
    const SpectralDecomposition d = eigendecompose(laplacian(g));
    const Vector y = random_vector(rng, n);
    Vector mu(frame.eta() * n);
    const double mu_scale = rng.uniform(0.05, 0.5);
    for (Index i = 0; i < mu.size(); ++i) mu[i] = mu_scale;

    const LassoBoundCheck check = verify_lasso_bound(d, frame, approx, y, mu);
    CheckResult r;
    r.name = "lasso bound case " + std::to_string(c);
    const double slack = 1e-8 * (1.0 + check.rhs);
    r.pass = check.lhs <= check.rhs + slack && check.rhs <= check.rhs_via_residual + slack;
    r.detail = "lhs=" + format_double(check.lhs) + " rhs=" + format_double(check.rhs) +
               " rhs(B(K))=" + format_double(check.rhs_via_residual);
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<CheckResult> check_tikhonov_closed_form(int cases, std::uint64_t seed) {
  std::vector<CheckResult> results;
  for (int c = 0; c < cases; ++c) {
    Rng rng = Rng::trial_stream(seed, static_cast<std::uint64_t>(c));
    const WeightedGraph g = random_connected_graph(rng, 5, 60);
    const double tau = rng.uniform(0.2, 5.0);
    const int r_pow = 1 + static_cast<int>(rng.below(3));
    const Vector y = random_vector(rng, g.node_count);

    const SparseMatrix l = laplacian(g);
    const SpectralDecomposition d = eigendecompose(l);
    const Vector via_multiplier =
        apply_multiplier_exact(d, tikhonov_multiplier(tau, r_pow), y);

    Matrix power = Matrix::Identity(l.size(), l.size());
    const Matrix dense_l = l.to_dense();
    for (int k = 0; k < r_pow; ++k) power = power * dense_l;
    const Matrix system = tau * Matrix::Identity(l.size(), l.size()) + 2.0 * power;
    const Vector direct = system.ldlt().solve(tau * y);

    const double rel = (via_multiplier - direct).norm() / direct.norm();
    CheckResult res;
    res.name = "tikhonov closed form case " + std::to_string(c);
    res.pass = rel <= 1e-9;
    res.detail = "relative error " + format_double(rel);
    results.push_back(std::move(res));
  }
  return results;
}

std::vector<CheckResult> run_verification(std::uint64_t seed) {
  std::vector<CheckResult> all;
  auto append = [&all](std::vector<CheckResult> v) {
    for (auto& r : v) all.push_back(std::move(r));
  };
  append(check_distributed_equivalence(25, seed, 1e-12, 60));
  append(check_message_counts(10, seed + 1));
  append(check_spectral_bound(10, seed + 2));
  all.push_back(check_kernel_decay());
  append(check_lasso_bound(5, seed + 3));
  append(check_tikhonov_closed_form(10, seed + 4));
  return all;
}

}  // namespace gcheb
