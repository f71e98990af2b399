#include "graphcheb/ssl.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gcheb {

void LabelMatrix::validate() const {
  for (Index i = 0; i < y.rows(); ++i) {
    int ones = 0;
    for (Index j = 0; j < y.cols(); ++j) {
      if (y(i, j) != 0.0 && y(i, j) != 1.0) {
        throw std::invalid_argument("label matrix entries must be 0 or 1");
      }
      if (y(i, j) == 1.0) ++ones;
    }
    if (ones > 1) throw std::invalid_argument("labeled row must carry exactly one 1");
  }
}

LabelMatrix make_labels(Index n, Index num_classes,
                        const std::vector<std::pair<int, int>>& node_class_pairs) {
  if (num_classes < 1) throw std::invalid_argument("need at least one class");
  LabelMatrix labels;
  labels.y = Matrix::Zero(n, num_classes);
  for (const auto& [node, cls] : node_class_pairs) {
    if (node < 0 || node >= n) throw std::invalid_argument("label node out of range");
    if (cls < 0 || cls >= num_classes) throw std::invalid_argument("class out of range");
    labels.y(node, cls) = 1.0;
    labels.labeled_nodes.push_back(node);
  }
  labels.validate();
  return labels;
}

LabelMatrix load_labels_csv(const std::string& path, Index n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<std::pair<int, int>> pairs;
  int max_class = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.find("node") != std::string::npos) continue;  // optional header
    std::istringstream row(line);
    std::string field;
    std::getline(row, field, ',');
    const int node = std::stoi(field);
    std::getline(row, field, ',');
    const int cls = std::stoi(field);
    max_class = std::max(max_class, cls);
    pairs.push_back({node, cls});
  }
  return make_labels(n, max_class + 1, pairs);
}

SslKernel ssl_kernel(const WeightedGraph& g, const SslKernelSpec& spec) {
  SslKernel kernel;
  switch (spec.kind) {
    case SslKernelKind::kLaplacianPower: {
      if (spec.r < 1) throw std::invalid_argument("power must be >= 1");
      const SparseMatrix l = laplacian(g);
      SparseMatrix p = l;
      for (int k = 1; k < spec.r; ++k) p = p.multiply(l);
      kernel.base = p;
      kernel.lambda_bound = std::pow(lambda_max_bound(g), spec.r);
      break;
    }
    case SslKernelKind::kNormalizedPower: {
      if (spec.r < 1) throw std::invalid_argument("power must be >= 1");
      const SparseMatrix l = normalized_laplacian(g);
      SparseMatrix p = l;
      for (int k = 1; k < spec.r; ++k) p = p.multiply(l);
      kernel.base = p;
      kernel.lambda_bound = std::pow(2.0, spec.r);
      break;
    }
    case SslKernelKind::kRandomWalkLaplacian: {
      kernel.lambda_bound = 2.0;
      if (spec.raw_recurrence) {
        // Asymmetric operator driven directly by the recurrence.
        kernel.base = random_walk_laplacian(g);
      } else {
        // L D^{-1} = D^{1/2} L_norm D^{-1/2}: run on L_norm, scale in/out.
        kernel.base = normalized_laplacian(g);
        const Vector d = g.degrees();
        kernel.similarity_scale = d.array().sqrt();
      }
      break;
    }
    case SslKernelKind::kDiffusion: {
      kernel.base = normalized_laplacian(g);
      kernel.lambda_bound = 2.0;
      const double s = spec.sigma;
      kernel.spectral = Multiplier{
          [s](double lambda) { return std::exp(s * s * lambda / 2.0); }, "diffusion"};
      break;
    }
    case SslKernelKind::kInverseCosine: {
      kernel.base = normalized_laplacian(g);
      kernel.lambda_bound = 2.0;
      kernel.spectral = Multiplier{
          [](double lambda) { return 1.0 / std::cos(3.14159265358979323846 * lambda / 4.0); },
          "inverse-cosine"};
      break;
    }
    case SslKernelKind::kRandomWalk: {
      if (spec.sigma < 2.0) throw std::invalid_argument("random walk requires sigma >= 2");
      if (spec.r < 1) throw std::invalid_argument("power must be >= 1");
      kernel.base = normalized_laplacian(g);
      kernel.lambda_bound = 2.0;
      const double s = spec.sigma;
      const int r = spec.r;
      kernel.spectral = Multiplier{
          [s, r](double lambda) { return std::pow(s - lambda, -r); }, "random-walk"};
      break;
    }
    case SslKernelKind::kKScaling: {
      if (spec.gamma < 0.0) throw std::invalid_argument("K-scaling shift must be >= 0");
      const SparseMatrix l = laplacian(g);
      const Vector d = g.degrees();
      std::vector<Triplet> entries;
      for (Index row = 0; row < l.size(); ++row) {
        const auto cols = l.row_cols(row);
        const auto vals = l.row_values(row);
        for (std::size_t i = 0; i < cols.size(); ++i) {
          const Index col = cols[i];
          const double shifted = (row == col) ? spec.gamma + vals[i] : vals[i];
          const double scale =
              std::sqrt((spec.gamma + d[row]) * (spec.gamma + d[col]));
          entries.push_back({static_cast<int>(row), static_cast<int>(col),
                             shifted / scale});
        }
      }
      kernel.base = SparseMatrix::from_triplets(l.size(), std::move(entries));
      kernel.lambda_bound = kernel.base.gershgorin_bound();
      break;
    }
  }
  return kernel;
}

std::vector<int> argmax_rows(const Matrix& scores) {
  std::vector<int> out(static_cast<std::size_t>(scores.rows()));
  for (Index i = 0; i < scores.rows(); ++i) {
    int best = 0;
    for (Index j = 1; j < scores.cols(); ++j) {
      if (scores(i, j) > scores(i, best)) best = static_cast<int>(j);
    }
    out[static_cast<std::size_t>(i)] = best;
  }
  return out;
}

SslResult ssl_classify(const WeightedGraph& g, const LabelMatrix& labels,
                       const SslKernelSpec& spec, double tau, int order) {
  if (tau <= 0.0) throw std::invalid_argument("tau must be positive");
  labels.validate();
  if (labels.y.rows() != g.node_count) throw std::invalid_argument("label size mismatch");
  if (labels.labeled_nodes.empty()) throw std::invalid_argument("need at least one label");

  const SslKernel kernel = ssl_kernel(g, spec);

  MultiplierUnion u;
  if (kernel.spectral) {
    const auto gfun = kernel.spectral->fn;
    u.multipliers.push_back(
        {[gfun, tau](double lambda) { return tau / (tau + gfun(lambda)); },
         "ssl-regularizer"});
  } else {
    u.multipliers.push_back(
        {[tau](double lambda) { return tau / (tau + lambda); }, "ssl-regularizer"});
  }
  const ChebyshevApprox approx = chebyshev_coefficients(u, kernel.lambda_bound, order);

  const Index n = g.node_count;
  const bool similarity = kernel.similarity_scale.size() > 0;

  SslResult result;
  result.scores.resize(n, labels.classes());
  long long messages = 0;
  long long volume = 0;
  SimNetwork net(kernel.base, Vector::Zero(n), approx);
  for (Index j = 0; j < labels.classes(); ++j) {
    Vector column = labels.y.col(j);
    if (similarity) column = column.cwiseQuotient(kernel.similarity_scale);
    SimRun run = net.run_forward_on(column);
    messages += run.trace.message_count;
    volume += run.trace.scalar_volume;
    Vector scores = run.output;
    if (similarity) scores = scores.cwiseProduct(kernel.similarity_scale);
    result.scores.col(j) = scores;
  }
  result.predictions = argmax_rows(result.scores);
  result.messages = {messages, volume};
  return result;
}

Matrix ssl_solve_dense(const Matrix& p, const Matrix& y, double tau) {
  if (p.rows() != y.rows()) throw std::invalid_argument("size mismatch");
  if (p.rows() > oracle_cap()) throw std::invalid_argument("oracle size cap");
  const Matrix system = tau * Matrix::Identity(p.rows(), p.cols()) + p;
  return system.partialPivLu().solve(tau * y);
}

}  // namespace gcheb
