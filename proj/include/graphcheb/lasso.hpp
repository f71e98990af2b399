#pragma once

#include "graphcheb/distsim.hpp"
#include "graphcheb/wavelets.hpp"

namespace gcheb {

// 0 when |z| <= t, else z shrunk toward zero by t.
double soft_threshold(double z, double t);

struct LassoConfig {
  Vector mu;                // per-coefficient weights, length N(J+1), all > 0
  double gamma = 0.2;       // step size; must stay below 2 / ||op||^2
  int max_iterations = 300;
  double epsilon = 0.0;     // > 0 enables the max-abs-change stopping rule
  // When set, the cached wavelet-analysis run is traced and exported here.
  std::string audit_trace_path;
};

struct LassoResult {
  Vector denoised;        // N
  Vector coefficients;    // (J+1) N, j-major
  int iterations = 0;
  bool converged = false;              // stopped by the epsilon rule
  bool gamma_exceeds_bound = false;    // step violates the convergence bound
  MessageSummary messages;
};

// Iterative soft thresholding on the approximate wavelet frame, every
// operator application routed through the network simulator.
LassoResult distributed_lasso(const WeightedGraph& g, const Vector& y,
                              const WaveletFrame& frame, const LassoConfig& cfg,
                              int order);

// Centralized reference: ISTA on an explicit dense operator (rows stacked
// j-major so op * f matches the stacked layout). Oracle for the distributed
// path and solver for the exact-operator problem.
struct IstaResult {
  Vector coefficients;
  int iterations = 0;
  double objective = 0.0;
};

IstaResult ista_dense(const Matrix& op, const Vector& y, const Vector& mu,
                      double gamma, int max_iterations, double objective_tol = 0.0);

// (1/2)||y - op^T a||^2 + sum_i mu_i |a_i|.
double lasso_objective(const Matrix& op, const Vector& y, const Vector& mu,
                       const Vector& a);

// Squared-distance bound between the exact- and approximate-operator lasso
// reconstructions: lhs = ||op_approx^T a_approx - op_exact^T a_exact||^2,
// rhs = (||y||^3 / min mu) * ||op_approx - op_exact||_2.
struct LassoBoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double rhs_via_residual = 0.0;  // same constant times B(K) sqrt(N (J+1))
};

LassoBoundCheck verify_lasso_bound(const SpectralDecomposition& d,
                                   const WaveletFrame& frame,
                                   const ChebyshevApprox& approx, const Vector& y,
                                   const Vector& mu);

}  // namespace gcheb
