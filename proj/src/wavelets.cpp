#include "graphcheb/wavelets.hpp"

#include <cmath>
#include <stdexcept>

namespace gcheb {

double sgwt_kernel(double x) {
  if (x < 0.0) return 0.0;
  if (x < 1.0) return x * x;
  if (x <= 2.0) return -5.0 + 11.0 * x - 6.0 * x * x + x * x * x;
  return 4.0 / (x * x);
}

WaveletFrame sgwt_frame(int num_scales, double lambda_max, double spectrum_span) {
  if (num_scales < 1) throw std::invalid_argument("need at least one wavelet scale");
  if (lambda_max <= 0.0) throw std::invalid_argument("lambda_max must be positive");
  if (spectrum_span <= 1.0) throw std::invalid_argument("spectrum span must exceed 1");

  WaveletFrame frame;
  frame.lambda_max = lambda_max;

  const double lambda_min = lambda_max / spectrum_span;
  const double t_coarsest = 2.0 / lambda_min;
  const double t_finest = 1.0 / lambda_max;
  frame.scales.resize(static_cast<std::size_t>(num_scales));
  if (num_scales == 1) {
    frame.scales[0] = t_finest;
  } else {
    const double log_hi = std::log(t_coarsest);
    const double log_lo = std::log(t_finest);
    for (int j = 0; j < num_scales; ++j) {
      frame.scales[static_cast<std::size_t>(j)] =
          std::exp(log_hi + (log_lo - log_hi) * j / (num_scales - 1));
    }
  }

  // Peak of the cubic bridge; used to match h(0) to the wavelet amplitude.
  const double x_peak = 2.0 - 1.0 / std::sqrt(3.0);
  const double gamma = sgwt_kernel(x_peak);
  const double h_width = 0.6 * lambda_min;

  frame.kernel = {[](double x) { return sgwt_kernel(x); }, "sgwt-bandpass"};
  frame.scaling = {[gamma, h_width](double x) {
                     const double z = x / h_width;
                     return gamma * std::exp(-(z * z * z * z));
                   },
                   "sgwt-scaling"};

  frame.stacked.multipliers.push_back(frame.scaling);
  for (double t : frame.scales) {
    frame.stacked.multipliers.push_back(
        {[t](double x) { return sgwt_kernel(t * x); }, "sgwt-scale"});
  }
  return frame;
}

}  // namespace gcheb
