#include "graphcheb/lasso.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "graphcheb/rng.hpp"

namespace gcheb {

double soft_threshold(double z, double t) {
  if (t < 0.0) throw std::invalid_argument("threshold must be >= 0");
  if (std::abs(z) <= t) return 0.0;
  return z > 0.0 ? z - t : z + t;
}

namespace {

// Power-iteration estimate of ||op^* op||_2 using the gram recurrence.
double gram_norm_estimate(const SparseMatrix& l, const ChebyshevApprox& approx) {
  Rng rng(0x67726D6Eull);  // fixed stream: the estimate is a diagnostic
  Vector v(l.size());
  for (Index i = 0; i < v.size(); ++i) v[i] = rng.uniform(-1.0, 1.0);
  v.normalize();
  double norm = 0.0;
  for (int it = 0; it < 50; ++it) {
    Vector w = apply_gram_approx(l, approx, v);
    norm = w.norm();
    if (norm == 0.0) return 0.0;
    v = w / norm;
  }
  return norm;
}

}  // namespace

LassoResult distributed_lasso(const WeightedGraph& g, const Vector& y,
                              const WaveletFrame& frame, const LassoConfig& cfg,
                              int order) {
  const Index n = g.node_count;
  const Index eta = frame.eta();
  if (y.size() != n) throw std::invalid_argument("signal size mismatch");
  if (cfg.mu.size() != eta * n) throw std::invalid_argument("mu length mismatch");
  if (cfg.mu.minCoeff() <= 0.0) throw std::invalid_argument("mu entries must be positive");
  if (cfg.gamma <= 0.0) throw std::invalid_argument("step size must be positive");

  const ChebyshevApprox approx =
      chebyshev_coefficients(frame.stacked, frame.lambda_max, order);

  LassoResult result;
  const SparseMatrix l = laplacian(g);
  const double op_norm_sq = gram_norm_estimate(l, approx);
  result.gamma_exceeds_bound = op_norm_sq > 0.0 && cfg.gamma >= 2.0 / op_norm_sq;

  SimNetwork net(g, y, approx);

  // Wavelet coefficients of the observation, computed once and cached.
  SimRun forward = net.run_forward(!cfg.audit_trace_path.empty());
  if (!cfg.audit_trace_path.empty()) {
    save_trace_csv(forward.trace, cfg.audit_trace_path);
  }
  const Vector xi_y = forward.output;
  long long messages = forward.trace.message_count;
  long long volume = forward.trace.scalar_volume;

  Vector a = Vector::Zero(eta * n);
  Vector prev_estimate;
  int iterations = 0;
  bool stopped = false;
  for (int beta = 1; beta <= cfg.max_iterations; ++beta) {
    // Adjoint of the current coefficients; doubles as the running estimate.
    SimRun adjoint = net.run_adjoint(a);
    messages += adjoint.trace.message_count;
    volume += adjoint.trace.scalar_volume;
    if (cfg.epsilon > 0.0 && prev_estimate.size() > 0) {
      const double change = (adjoint.output - prev_estimate).cwiseAbs().maxCoeff();
      if (change < cfg.epsilon) {
        result.denoised = adjoint.output;
        result.converged = true;
        stopped = true;
        break;
      }
    }
    prev_estimate = adjoint.output;

    SimRun gram = net.run_forward_on(adjoint.output);
    messages += gram.trace.message_count;
    volume += gram.trace.scalar_volume;

    for (Index i = 0; i < eta * n; ++i) {
      const double z = a[i] + cfg.gamma * xi_y[i] - cfg.gamma * gram.output[i];
      a[i] = soft_threshold(z, cfg.mu[i] * cfg.gamma);
    }
    iterations = beta;
  }

  if (!stopped) {
    SimRun final_adjoint = net.run_adjoint(a);
    messages += final_adjoint.trace.message_count;
    volume += final_adjoint.trace.scalar_volume;
    result.denoised = final_adjoint.output;
  }
  result.coefficients = a;
  result.iterations = iterations;
  result.messages = {messages, volume};
  return result;
}

double lasso_objective(const Matrix& op, const Vector& y, const Vector& mu,
                       const Vector& a) {
  const double fit = 0.5 * (y - op.transpose() * a).squaredNorm();
  return fit + mu.cwiseProduct(a.cwiseAbs()).sum();
}

IstaResult ista_dense(const Matrix& op, const Vector& y, const Vector& mu,
                      double gamma, int max_iterations, double objective_tol) {
  if (op.cols() != y.size()) throw std::invalid_argument("operator/signal mismatch");
  if (mu.size() != op.rows()) throw std::invalid_argument("mu length mismatch");

  IstaResult result;
  Vector a = Vector::Zero(op.rows());
  const Vector op_y = op * y;
  double prev_obj = lasso_objective(op, y, mu, a);
  for (int beta = 1; beta <= max_iterations; ++beta) {
    const Vector grad_step = a + gamma * op_y - gamma * (op * (op.transpose() * a));
    for (Index i = 0; i < a.size(); ++i) {
      a[i] = soft_threshold(grad_step[i], mu[i] * gamma);
    }
    result.iterations = beta;
    if (objective_tol > 0.0) {
      const double obj = lasso_objective(op, y, mu, a);
      if (std::abs(prev_obj - obj) <= objective_tol) {
        prev_obj = obj;
        break;
      }
      prev_obj = obj;
    }
  }
  result.coefficients = a;
  result.objective = lasso_objective(op, y, mu, a);
  return result;
}

LassoBoundCheck verify_lasso_bound(const SpectralDecomposition& d,
                                   const WaveletFrame& frame,
                                   const ChebyshevApprox& approx, const Vector& y,
                                   const Vector& mu) {
  const Index n = d.size();
  const Index eta = frame.eta();
  if (n > oracle_cap()) throw std::invalid_argument("oracle size cap");

  const Matrix exact = operator_matrix(d, frame.stacked);
  Matrix approximate(eta * n, n);
  for (Index j = 0; j < eta; ++j) {
    Vector pvals(n);
    for (Index l = 0; l < n; ++l) {
      pvals[l] = evaluate_approx(approx, j, std::max(d.eigenvalues[l], 0.0));
    }
    approximate.middleRows(j * n, n) =
        d.eigenvectors * pvals.asDiagonal() * d.eigenvectors.transpose();
  }

  // Both problems solved to tight stationarity with steps just inside the
  // convergence bound.
  Eigen::JacobiSVD<Matrix> svd_exact(exact);
  Eigen::JacobiSVD<Matrix> svd_approx(approximate);
  const double gamma_exact =
      0.9 / std::max(std::pow(svd_exact.singularValues()[0], 2), 1e-12);
  const double gamma_approx =
      0.9 / std::max(std::pow(svd_approx.singularValues()[0], 2), 1e-12);
  const IstaResult sol_exact = ista_dense(exact, y, mu, gamma_exact, 400000, 1e-10);
  const IstaResult sol_approx =
      ista_dense(approximate, y, mu, gamma_approx, 400000, 1e-10);

  LassoBoundCheck check;
  check.lhs = (approximate.transpose() * sol_approx.coefficients -
               exact.transpose() * sol_exact.coefficients)
                  .squaredNorm();
  Eigen::JacobiSVD<Matrix> svd(approximate - exact);
  const double c = std::pow(y.norm(), 3) / mu.minCoeff();
  check.rhs = c * svd.singularValues()[0];
  check.rhs_via_residual = c * residual_sup(frame.stacked, approx) *
                           std::sqrt(static_cast<double>(eta * n));
  return check;
}

}  // namespace gcheb
