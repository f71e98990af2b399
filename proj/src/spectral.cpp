#include "graphcheb/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace gcheb {

void MultiplierUnion::validate() const {
  if (multipliers.empty()) throw std::invalid_argument("union needs at least one multiplier");
  for (const Multiplier& m : multipliers) {
    if (!m.fn) throw std::invalid_argument("multiplier has no function");
  }
}

SpectralDecomposition eigendecompose(const Matrix& p) {
  if (p.rows() != p.cols()) throw std::invalid_argument("matrix not square");
  if (p.rows() > oracle_cap()) throw std::invalid_argument("oracle size cap");
  const double scale = p.cwiseAbs().maxCoeff();
  if (scale > 0.0 && (p - p.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("matrix not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(p);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SpectralDecomposition eigendecompose(const SparseMatrix& p) {
  if (!p.is_symmetric(1e-12)) throw std::invalid_argument("matrix not symmetric");
  if (p.size() > oracle_cap()) throw std::invalid_argument("oracle size cap");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(p.to_dense());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Vector gft(const SpectralDecomposition& d, const Vector& f) {
  if (f.size() != d.size()) throw std::invalid_argument("size mismatch in gft");
  return d.eigenvectors.transpose() * f;
}

Vector igft(const SpectralDecomposition& d, const Vector& fhat) {
  if (fhat.size() != d.size()) throw std::invalid_argument("size mismatch in igft");
  return d.eigenvectors * fhat;
}

namespace {

// g evaluated across the spectrum with the zero clamp.
Vector spectrum_values(const SpectralDecomposition& d, const Multiplier& g) {
  Vector out(d.size());
  for (Index l = 0; l < d.size(); ++l) {
    const double lambda = std::max(d.eigenvalues[l], 0.0);
    const double v = g(lambda);
    if (!std::isfinite(v)) {
      throw std::invalid_argument("multiplier singular on spectrum");
    }
    out[l] = v;
  }
  return out;
}

}  // namespace

Vector apply_multiplier_exact(const SpectralDecomposition& d, const Multiplier& g,
                              const Vector& f) {
  if (f.size() != d.size()) throw std::invalid_argument("size mismatch");
  const Vector fhat = gft(d, f);
  return igft(d, spectrum_values(d, g).cwiseProduct(fhat));
}

Vector apply_union_exact(const SpectralDecomposition& d, const MultiplierUnion& u,
                         const Vector& f) {
  u.validate();
  if (f.size() != d.size()) throw std::invalid_argument("size mismatch");
  const Index n = d.size();
  const Vector fhat = gft(d, f);
  Vector out(u.eta() * n);
  for (Index j = 0; j < u.eta(); ++j) {
    const Vector gvals = spectrum_values(d, u.multipliers[static_cast<std::size_t>(j)]);
    out.segment(j * n, n) = igft(d, gvals.cwiseProduct(fhat));
  }
  return out;
}

Vector adjoint_union_exact(const SpectralDecomposition& d, const MultiplierUnion& u,
                           const Vector& a) {
  u.validate();
  const Index n = d.size();
  if (a.size() != u.eta() * n) throw std::invalid_argument("size mismatch");
  Vector out = Vector::Zero(n);
  for (Index j = 0; j < u.eta(); ++j) {
    // Each block operator is symmetric, hence self-adjoint.
    out += apply_multiplier_exact(d, u.multipliers[static_cast<std::size_t>(j)],
                                  a.segment(j * n, n));
  }
  return out;
}

bool commutes(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("dimension mismatch");
  }
  const double lhs = (a * b - b * a).norm();
  return lhs <= tol * a.norm() * b.norm();
}

void save_decomposition_json(const SpectralDecomposition& d, const std::string& path) {
  nlohmann::json j;
  j["eigenvalues"] = std::vector<double>(d.eigenvalues.data(),
                                         d.eigenvalues.data() + d.eigenvalues.size());
  j["eigenvectors"] = nlohmann::json::array();
  for (Index c = 0; c < d.eigenvectors.cols(); ++c) {
    std::vector<double> col(d.eigenvectors.col(c).data(),
                            d.eigenvectors.col(c).data() + d.eigenvectors.rows());
    j["eigenvectors"].push_back(col);
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump() << '\n';
}

Matrix operator_matrix(const SpectralDecomposition& d, const MultiplierUnion& u) {
  u.validate();
  const Index n = d.size();
  if (n > oracle_cap()) throw std::invalid_argument("oracle size cap");
  Matrix phi(u.eta() * n, n);
  for (Index j = 0; j < u.eta(); ++j) {
    const Vector gvals = spectrum_values(d, u.multipliers[static_cast<std::size_t>(j)]);
    phi.middleRows(j * n, n) =
        d.eigenvectors * gvals.asDiagonal() * d.eigenvectors.transpose();
  }
  return phi;
}

}  // namespace gcheb
