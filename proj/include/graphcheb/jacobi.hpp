#pragma once

#include <string>
#include <vector>

#include "graphcheb/sparse.hpp"
#include "graphcheb/spectral.hpp"

namespace gcheb {

// Linear system Q x = y with the Jacobi split Q = Q_D - Q_O, where Q_D is
// the (positive) diagonal and Q_O carries the negated off-diagonal entries.
struct JacobiSystem {
  Vector diag;       // Q_D
  SparseMatrix off;  // Q_O, zero diagonal
  Vector rhs;        // y
  std::string provenance;

  Index size() const { return diag.size(); }
  void validate() const;
};

// Q = (tau I + P) / tau, the system whose solution applies the multiplier
// tau / (tau + lambda) with respect to P. 1/g is affine in lambda here, so Q
// keeps P's sparsity; non-affine multipliers need the dense builder below.
JacobiSystem build_jacobi_system(const SparseMatrix& p, double tau, const Vector& y);

// Dense-oracle route: Q = sum_l (1 / g(lambda_l)) chi_l chi_l^T materialized
// from an eigendecomposition (subject to the oracle cap).
JacobiSystem build_jacobi_system_dense(const SpectralDecomposition& d,
                                       const Multiplier& g, const Vector& y);

// Plain Jacobi sweeps x <- Q_D^{-1} (Q_O x + y); history[k] is the k-th
// iterate, history[0] = x0. Divergence is data, not an error.
std::vector<Vector> jacobi_iterate(const JacobiSystem& sys, const Vector& x0,
                                   int iterations);

// Largest |eigenvalue| of Q_D^{-1} Q_O via a dense eigensolve.
double spectral_radius_iteration(const JacobiSystem& sys);

// Chebyshev-weighted combination of Jacobi iterates; rho is an upper bound
// (< 1) on the iteration-matrix spectral radius.
std::vector<Vector> jacobi_cheb_accelerated(const JacobiSystem& sys, double rho,
                                            const Vector& x0, int iterations);

// Error curves ||f^(K) - f||_2 for the polynomial multiplier method against
// both Jacobi variants at matched communication cost. The multiplier-method
// domain uses the true spectral maximum of P (both baselines likewise get
// the exact iteration spectral radius).
struct SolverComparison {
  std::vector<double> err_multiplier;
  std::vector<double> err_jacobi;
  std::vector<double> err_jacobi_accel;
  double iteration_radius = 0.0;
  bool accel_rho_clamped = false;  // true radius >= 1; curve run at rho ~ 1
};

SolverComparison convergence_compare(const SparseMatrix& p, double tau,
                                     const Vector& f_true, int k_max,
                                     double lambda_max_p = -1.0);

}  // namespace gcheb
