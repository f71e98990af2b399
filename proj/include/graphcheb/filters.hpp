#pragma once

#include "graphcheb/distsim.hpp"
#include "graphcheb/graph.hpp"
#include "graphcheb/spectral.hpp"

namespace gcheb {

// Heat kernel multiplier e^{-t lambda}.
Multiplier heat_multiplier(double t);

// Regularization multiplier tau / (tau + 2 lambda^r): the closed-form
// solution of the quadratic smoothness-penalized denoising problem.
Multiplier tikhonov_multiplier(double tau, int r);

// Regularized deconvolution multiplier
//   h(lambda) = tau g(lambda) / (tau g(lambda)^2 + 2 lambda^r),
// with h defined as 0 where the denominator vanishes (g(0) = 0 case): the
// unrecoverable mode is dropped instead of amplified.
Multiplier inverse_filter_multiplier(const Multiplier& g_psi, double tau, int r);

// Distributed Tikhonov denoising: eta = 1 forward run over the network.
struct DenoiseResult {
  Vector denoised;
  RoundTrace trace;
};

DenoiseResult denoise_tikhonov(const WeightedGraph& g, const Vector& y, double tau,
                               int r, int order, bool audit = false);

}  // namespace gcheb
