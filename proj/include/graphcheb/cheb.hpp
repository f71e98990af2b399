#pragma once

#include <string>

#include "graphcheb/sparse.hpp"
#include "graphcheb/spectral.hpp"
#include "graphcheb/types.hpp"

namespace gcheb {

// Shifted-Chebyshev coefficients of a multiplier union. lambda_max is the
// value used for the domain shift (typically the edge-degree bound, not the
// true spectral maximum); it travels with the coefficients so that the
// recurrence can never run with a mismatched shift.
struct ChebyshevApprox {
  Matrix coefficients;  // eta x (order+1), row j holds c_{j,0..K}
  double lambda_max = 0.0;

  Index eta() const { return coefficients.rows(); }
  Index order() const { return coefficients.cols() - 1; }
  double alpha() const { return lambda_max / 2.0; }
};

// c_{j,k} = (2/pi) * integral_0^pi cos(k theta) g_j(alpha(cos theta + 1)) dtheta,
// computed with a q-point midpoint cosine rule (spectrally accurate for the
// smooth multipliers used here).
ChebyshevApprox chebyshev_coefficients(const MultiplierUnion& u, double lambda_max,
                                       int order, int quad_points = 500);

// Truncated expansion p_j^K evaluated at a scalar point.
double evaluate_approx(const ChebyshevApprox& approx, Index j, double x);

// max over multipliers and a uniform grid on [0, lambda_max] of
// |g_j(x) - p_j^K(x)|; the B(K) estimate. Requires grid_points >= 1000.
double residual_sup(const MultiplierUnion& u, const ChebyshevApprox& approx,
                    int grid_points = 2000);

// Stacked approximate operator via the two-term recurrence; output j-major.
Vector apply_approx(const SparseMatrix& l, const ChebyshevApprox& approx,
                    const Vector& f);

// Adjoint of the stacked approximate operator.
Vector apply_adjoint_approx(const SparseMatrix& l, const ChebyshevApprox& approx,
                            const Vector& a);

// Coefficients d_0..d_{2K} with
//   (1/2) d_0 + sum_k d_k Tbar_k(x) = sum_j (p_j^K(x))^2,
// obtained from T_a T_b = (T_{a+b} + T_{|a-b|}) / 2.
struct GramCoefficients {
  Vector d;
};

GramCoefficients gram_coefficients(const ChebyshevApprox& approx);

// Gram operator (adjoint of forward) in a single order-2K recurrence pass.
Vector apply_gram_approx(const SparseMatrix& l, const ChebyshevApprox& approx,
                         const Vector& f);

// Spectral-norm check of the approximation error bound: lhs is the largest
// singular value of the dense difference operator, rhs the grid residual
// times sqrt(eta * N). Contract: lhs <= rhs + grid slack.
struct SpectralBoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

SpectralBoundCheck verify_spectral_bound(const SpectralDecomposition& d,
                                         const MultiplierUnion& u,
                                         const ChebyshevApprox& approx);

void save_coefficients_json(const ChebyshevApprox& approx, const std::string& path);
ChebyshevApprox load_coefficients_json(const std::string& path);

}  // namespace gcheb
