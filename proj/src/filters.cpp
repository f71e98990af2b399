#include "graphcheb/filters.hpp"

#include <cmath>
#include <stdexcept>

namespace gcheb {

Multiplier heat_multiplier(double t) {
  if (t < 0.0) throw std::invalid_argument("diffusion time must be >= 0");
  return {[t](double lambda) { return std::exp(-t * lambda); }, "heat"};
}

Multiplier tikhonov_multiplier(double tau, int r) {
  if (tau <= 0.0) throw std::invalid_argument("tau must be positive");
  if (r < 1) throw std::invalid_argument("Laplacian power must be >= 1");
  return {[tau, r](double lambda) {
            return tau / (tau + 2.0 * std::pow(lambda, r));
          },
          "tikhonov"};
}

Multiplier inverse_filter_multiplier(const Multiplier& g_psi, double tau, int r) {
  if (tau <= 0.0) throw std::invalid_argument("tau must be positive");
  if (r < 1) throw std::invalid_argument("Laplacian power must be >= 1");
  auto base = g_psi.fn;
  return {[base, tau, r](double lambda) {
            const double g = base(lambda);
            const double denom = tau * g * g + 2.0 * std::pow(lambda, r);
            if (denom == 0.0) return 0.0;
            return tau * g / denom;
          },
          "inverse-filter"};
}

DenoiseResult denoise_tikhonov(const WeightedGraph& g, const Vector& y, double tau,
                               int r, int order, bool audit) {
  MultiplierUnion u;
  u.multipliers.push_back(tikhonov_multiplier(tau, r));
  const double bound = lambda_max_bound(g);
  const ChebyshevApprox approx = chebyshev_coefficients(u, bound, order);
  SimNetwork net(g, y, approx);
  SimRun run = net.run_forward(audit);
  return {std::move(run.output), std::move(run.trace)};
}

}  // namespace gcheb
