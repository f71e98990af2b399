#pragma once

#include <functional>
#include <string>
#include <vector>

#include "graphcheb/sparse.hpp"
#include "graphcheb/types.hpp"

namespace gcheb {

// Real function of the eigenvalue, defined on [0, lambda_max].
struct Multiplier {
  std::function<double(double)> fn;
  std::string name;

  double operator()(double lambda) const { return fn(lambda); }
};

// Ordered multipliers g_1..g_eta sharing one spectral domain. Stacked
// operator outputs are laid out j-major: entry (j-1)*N + n.
struct MultiplierUnion {
  std::vector<Multiplier> multipliers;

  Index eta() const { return static_cast<Index>(multipliers.size()); }
  void validate() const;
};

// Full dense eigendecomposition; the brute-force reference all approximation
// tests compare against.
struct SpectralDecomposition {
  Vector eigenvalues;   // non-decreasing
  Matrix eigenvectors;  // orthonormal columns

  Index size() const { return eigenvalues.size(); }
  double lambda_max() const { return eigenvalues[eigenvalues.size() - 1]; }
};

SpectralDecomposition eigendecompose(const SparseMatrix& p);
SpectralDecomposition eigendecompose(const Matrix& p);

// Forward and inverse transforms in the eigenvector basis.
Vector gft(const SpectralDecomposition& d, const Vector& f);
Vector igft(const SpectralDecomposition& d, const Vector& fhat);

// sum_l g(lambda_l) fhat(l) chi_l(n). Eigenvalues are clamped at zero before
// evaluating g, absorbing -1e-12 style numerical negatives.
Vector apply_multiplier_exact(const SpectralDecomposition& d, const Multiplier& g,
                              const Vector& f);

// Stacked application: length eta*N, block j holds Psi_j f.
Vector apply_union_exact(const SpectralDecomposition& d, const MultiplierUnion& u,
                         const Vector& f);

// Adjoint of the stacked operator: sum_j Psi_j a_j.
Vector adjoint_union_exact(const SpectralDecomposition& d, const MultiplierUnion& u,
                           const Vector& a);

// ||AB - BA||_F <= tol * ||A||_F * ||B||_F.
bool commutes(const Matrix& a, const Matrix& b, double tol);

// Dense (eta*N) x N materialization of the stacked operator.
Matrix operator_matrix(const SpectralDecomposition& d, const MultiplierUnion& u);

// Debug dump of a decomposition; not a stability contract.
void save_decomposition_json(const SpectralDecomposition& d, const std::string& path);

}  // namespace gcheb
