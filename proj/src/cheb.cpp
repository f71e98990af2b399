#include "graphcheb/cheb.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace gcheb {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_sizes(const SparseMatrix& l, const ChebyshevApprox& approx, Index vec_len,
                 Index expected) {
  if (approx.order() < 1) throw std::invalid_argument("approximation order must be >= 1");
  if (approx.lambda_max <= 0.0) throw std::invalid_argument("lambda_max must be positive");
  if (vec_len != expected) throw std::invalid_argument("size mismatch");
  (void)l;
}

// Runs the shifted recurrence on f, handing each Tbar_k(L) f to the visitor
// in ascending k. Row sums follow the matrix's ascending-column order; the
// scalar shape of each update matches the per-node computation in the
// simulator exactly, which keeps the two paths bit-identical.
template <class Visitor>
void run_recurrence(const SparseMatrix& l, double alpha, const Vector& f, Index order,
                    Visitor&& visit) {
  const Index n = l.size();
  Vector t_prev2 = f;
  visit(Index{0}, t_prev2);

  Vector t_prev1(n);
  const double inv_alpha = 1.0 / alpha;
  for (Index i = 0; i < n; ++i) {
    t_prev1[i] = inv_alpha * l.row_dot(i, f) - f[i];
  }
  visit(Index{1}, t_prev1);

  Vector t_cur(n);
  const double two_inv_alpha = 2.0 / alpha;
  for (Index k = 2; k <= order; ++k) {
    for (Index i = 0; i < n; ++i) {
      t_cur[i] = two_inv_alpha * l.row_dot(i, t_prev1) - 2.0 * t_prev1[i] - t_prev2[i];
    }
    visit(k, t_cur);
    t_prev2.swap(t_prev1);
    t_prev1.swap(t_cur);
  }
}

}  // namespace

ChebyshevApprox chebyshev_coefficients(const MultiplierUnion& u, double lambda_max,
                                       int order, int quad_points) {
  u.validate();
  if (order < 1) throw std::invalid_argument("approximation order must be >= 1");
  if (lambda_max <= 0.0) throw std::invalid_argument("lambda_max must be positive");
  if (quad_points < order + 1) {
    throw std::invalid_argument("need at least order+1 quadrature points");
  }

  const double alpha = lambda_max / 2.0;
  const Index eta = u.eta();

  // Multiplier samples at the quadrature nodes theta_i = pi (i + 1/2) / q.
  Matrix samples(eta, quad_points);
  std::vector<double> cos_theta(static_cast<std::size_t>(quad_points));
  for (int i = 0; i < quad_points; ++i) {
    const double theta = kPi * (i + 0.5) / quad_points;
    cos_theta[static_cast<std::size_t>(i)] = std::cos(theta);
    const double x = alpha * (std::cos(theta) + 1.0);
    for (Index j = 0; j < eta; ++j) {
      const double v = u.multipliers[static_cast<std::size_t>(j)](x);
      if (!std::isfinite(v)) throw std::invalid_argument("multiplier not evaluable");
      samples(j, i) = v;
    }
  }

  ChebyshevApprox approx;
  approx.lambda_max = lambda_max;
  approx.coefficients.resize(eta, order + 1);
  for (int k = 0; k <= order; ++k) {
    for (Index j = 0; j < eta; ++j) {
      double acc = 0.0;
      for (int i = 0; i < quad_points; ++i) {
        const double theta = kPi * (i + 0.5) / quad_points;
        acc += std::cos(k * theta) * samples(j, i);
      }
      approx.coefficients(j, k) = 2.0 * acc / quad_points;
    }
  }
  return approx;
}

double evaluate_approx(const ChebyshevApprox& approx, Index j, double x) {
  const double alpha = approx.alpha();
  const double y = (x - alpha) / alpha;
  double t_prev2 = 1.0;
  double t_prev1 = y;
  double acc = 0.5 * approx.coefficients(j, 0);
  if (approx.order() >= 1) acc += approx.coefficients(j, 1) * t_prev1;
  for (Index k = 2; k <= approx.order(); ++k) {
    const double t = 2.0 * y * t_prev1 - t_prev2;
    acc += approx.coefficients(j, k) * t;
    t_prev2 = t_prev1;
    t_prev1 = t;
  }
  return acc;
}

double residual_sup(const MultiplierUnion& u, const ChebyshevApprox& approx,
                    int grid_points) {
  u.validate();
  if (u.eta() != approx.eta()) throw std::invalid_argument("eta mismatch");
  if (grid_points < 1000) throw std::invalid_argument("grid_points must be >= 1000");
  double worst = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = approx.lambda_max * i / (grid_points - 1);
    for (Index j = 0; j < u.eta(); ++j) {
      const double g = u.multipliers[static_cast<std::size_t>(j)](x);
      const double p = evaluate_approx(approx, j, x);
      worst = std::max(worst, std::abs(g - p));
    }
  }
  return worst;
}

Vector apply_approx(const SparseMatrix& l, const ChebyshevApprox& approx,
                    const Vector& f) {
  check_sizes(l, approx, f.size(), l.size());
  const Index n = l.size();
  const Index eta = approx.eta();
  Vector out(eta * n);
  for (Index j = 0; j < eta; ++j) {
    const double half_c0 = 0.5 * approx.coefficients(j, 0);
    for (Index i = 0; i < n; ++i) out[j * n + i] = half_c0 * f[i];
  }
  run_recurrence(l, approx.alpha(), f, approx.order(), [&](Index k, const Vector& t) {
    if (k == 0) return;
    for (Index j = 0; j < eta; ++j) {
      const double c = approx.coefficients(j, k);
      for (Index i = 0; i < n; ++i) out[j * n + i] += c * t[i];
    }
  });
  return out;
}

Vector apply_adjoint_approx(const SparseMatrix& l, const ChebyshevApprox& approx,
                            const Vector& a) {
  const Index n = l.size();
  const Index eta = approx.eta();
  check_sizes(l, approx, a.size(), eta * n);
  Vector out = Vector::Zero(n);
  Vector inner(n);
  for (Index j = 0; j < eta; ++j) {
    const Vector a_j = a.segment(j * n, n);
    const double half_c0 = 0.5 * approx.coefficients(j, 0);
    for (Index i = 0; i < n; ++i) inner[i] = half_c0 * a_j[i];
    run_recurrence(l, approx.alpha(), a_j, approx.order(), [&](Index k, const Vector& t) {
      if (k == 0) return;
      const double c = approx.coefficients(j, k);
      for (Index i = 0; i < n; ++i) inner[i] += c * t[i];
    });
    out += inner;
  }
  return out;
}

GramCoefficients gram_coefficients(const ChebyshevApprox& approx) {
  const Index order = approx.order();
  Vector d = Vector::Zero(2 * order + 1);
  for (Index j = 0; j < approx.eta(); ++j) {
    // Basis coefficients of p_j with the constant term folded in: b_0 = c_0/2.
    Vector b = approx.coefficients.row(j);
    b[0] *= 0.5;
    for (Index a = 0; a <= order; ++a) {
      for (Index c = 0; c <= order; ++c) {
        const double w = 0.5 * b[a] * b[c];
        d[a + c] += w;
        d[std::abs(a - c)] += w;
      }
    }
  }
  // d_0 is stored in the same half-weight convention as c_0.
  d[0] *= 2.0;
  return {d};
}

Vector apply_gram_approx(const SparseMatrix& l, const ChebyshevApprox& approx,
                         const Vector& f) {
  check_sizes(l, approx, f.size(), l.size());
  const GramCoefficients gram = gram_coefficients(approx);
  const Index n = l.size();
  Vector out(n);
  const double half_d0 = 0.5 * gram.d[0];
  for (Index i = 0; i < n; ++i) out[i] = half_d0 * f[i];
  run_recurrence(l, approx.alpha(), f, 2 * approx.order(),
                 [&](Index k, const Vector& t) {
                   if (k == 0) return;
                   const double c = gram.d[k];
                   for (Index i = 0; i < n; ++i) out[i] += c * t[i];
                 });
  return out;
}

SpectralBoundCheck verify_spectral_bound(const SpectralDecomposition& d,
                                         const MultiplierUnion& u,
                                         const ChebyshevApprox& approx) {
  u.validate();
  if (u.eta() != approx.eta()) throw std::invalid_argument("eta mismatch");
  const Index n = d.size();
  if (n > oracle_cap()) throw std::invalid_argument("oracle size cap");

  const Matrix exact = operator_matrix(d, u);
  Matrix difference(u.eta() * n, n);
  for (Index j = 0; j < u.eta(); ++j) {
    Vector pvals(n);
    for (Index l = 0; l < n; ++l) {
      pvals[l] = evaluate_approx(approx, j, std::max(d.eigenvalues[l], 0.0));
    }
    difference.middleRows(j * n, n) =
        exact.middleRows(j * n, n) -
        d.eigenvectors * pvals.asDiagonal() * d.eigenvectors.transpose();
  }
  Eigen::JacobiSVD<Matrix> svd(difference);
  SpectralBoundCheck check;
  check.lhs = svd.singularValues()[0];
  check.rhs = residual_sup(u, approx) * std::sqrt(static_cast<double>(u.eta() * n));
  return check;
}

void save_coefficients_json(const ChebyshevApprox& approx, const std::string& path) {
  nlohmann::json j;
  j["lambda_max"] = approx.lambda_max;
  j["K"] = approx.order();
  j["eta"] = approx.eta();
  j["coeffs"] = nlohmann::json::array();
  for (Index r = 0; r < approx.eta(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index k = 0; k <= approx.order(); ++k) row.push_back(approx.coefficients(r, k));
    j["coeffs"].push_back(row);
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

ChebyshevApprox load_coefficients_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  in >> j;
  ChebyshevApprox approx;
  approx.lambda_max = j.at("lambda_max").get<double>();
  const Index eta = j.at("eta").get<Index>();
  const Index order = j.at("K").get<Index>();
  approx.coefficients.resize(eta, order + 1);
  const auto& rows = j.at("coeffs");
  for (Index r = 0; r < eta; ++r) {
    for (Index k = 0; k <= order; ++k) {
      approx.coefficients(r, k) = rows.at(r).at(k).get<double>();
    }
  }
  return approx;
}

}  // namespace gcheb
