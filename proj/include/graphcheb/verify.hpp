#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphcheb/graph.hpp"
#include "graphcheb/rng.hpp"
#include "graphcheb/spectral.hpp"

namespace gcheb {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<CheckResult>& results);

// Random connected weighted graph: spanning chain over a shuffled node order
// plus Bernoulli extra edges, weights uniform.
WeightedGraph random_connected_graph(Rng& rng, int min_nodes, int max_nodes);

// Smooth random multiplier drawn from a few families (heat, regularizer,
// Gaussian bump, low-degree polynomial), finite on [0, lambda_max].
MultiplierUnion random_union(Rng& rng, Index eta, double lambda_max);

// Forward / adjoint / gram runs against their centralized counterparts,
// max-abs tolerance per case.
std::vector<CheckResult> check_distributed_equivalence(int cases, std::uint64_t seed,
                                                       double tol, int max_nodes);

// Exact integer message accounting (2K|E|, 2K|E| length-eta, 4K|E|) plus the
// edge-locality audit of fully traced runs.
std::vector<CheckResult> check_message_counts(int graphs, std::uint64_t seed);

// Spectral-norm error bound ||Phi - Phi~||_2 <= B(K) sqrt(eta N) on random
// instances, dense SVD on the left side.
std::vector<CheckResult> check_spectral_bound(int cases, std::uint64_t seed);

// Residual decay for the heat kernel on [0, 10]: strictly decreasing over
// K in {5, 10, 20, 40} and below 1e-8 at K = 40.
CheckResult check_kernel_decay();

// Squared-distance bound between exact- and approximate-operator lasso
// solutions on small random instances.
std::vector<CheckResult> check_lasso_bound(int cases, std::uint64_t seed);

// Exact regularization multiplier versus the dense linear solve
// (tau I + 2 L^r) f = tau y.
std::vector<CheckResult> check_tikhonov_closed_form(int cases, std::uint64_t seed);

// Full verification sweep at desk scale (the CLI `verify` command).
std::vector<CheckResult> run_verification(std::uint64_t seed);

}  // namespace gcheb
