#pragma once

#include <vector>

#include "graphcheb/spectral.hpp"

namespace gcheb {

// Spectral graph wavelet frame: one low-pass scaling multiplier h plus J
// band-pass wavelet multipliers g(t_j .), stacked in that order (eta = J+1).
//
// Reference design pinned by this repo:
//   * band-pass kernel g: x^2 below x1=1, the cubic bridge
//     -5 + 11x - 6x^2 + x^3 on [1,2], then 4/x^2 beyond x2=2
//     (monic-polynomial rise, power-law decay, C^1 at the knees);
//   * J scales log-spaced from x2/lambda_min down to x1/lambda_max with
//     lambda_min = lambda_max / 20;
//   * scaling function h(x) = gamma * exp(-(x / (0.6 lambda_min))^4) with
//     gamma = max g = g(2 - 1/sqrt(3)).
struct WaveletFrame {
  Multiplier scaling;          // h
  Multiplier kernel;           // base band-pass g
  std::vector<double> scales;  // t_1 > ... > t_J > 0
  double lambda_max = 0.0;     // design domain, shared with the Chebyshev shift
  MultiplierUnion stacked;     // (h, g(t_1 .), ..., g(t_J .))

  Index eta() const { return static_cast<Index>(scales.size()) + 1; }
};

// Base band-pass kernel of the reference design.
double sgwt_kernel(double x);

WaveletFrame sgwt_frame(int num_scales, double lambda_max,
                        double spectrum_span = 20.0);

}  // namespace gcheb
