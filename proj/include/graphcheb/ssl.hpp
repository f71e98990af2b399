#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graphcheb/distsim.hpp"
#include "graphcheb/graph.hpp"
#include "graphcheb/spectral.hpp"

namespace gcheb {

// N x kappa 0/1 indicator matrix: labeled rows carry exactly one 1,
// unlabeled rows are all-zero.
struct LabelMatrix {
  Matrix y;
  std::vector<int> labeled_nodes;

  Index classes() const { return y.cols(); }
  void validate() const;
};

LabelMatrix make_labels(Index n, Index num_classes,
                        const std::vector<std::pair<int, int>>& node_class_pairs);

// Label file: CSV lines "node_id,class" (0-based).
LabelMatrix load_labels_csv(const std::string& path, Index n);

enum class SslKernelKind {
  kLaplacianPower,        // P = L^r
  kNormalizedPower,       // P = L_norm^r
  kRandomWalkLaplacian,   // P = L D^{-1} (asymmetric)
  kDiffusion,             // P = g(L_norm), g = exp(sigma^2 lambda / 2)
  kInverseCosine,         // P = g(L_norm), g = 1 / cos(pi lambda / 4)
  kRandomWalk,            // P = g(L_norm), g = (sigma - lambda)^{-r}, sigma >= 2
  kKScaling,              // P = (gI+D)^{-1/2} (gI+L) (gI+D)^{-1/2}
};

struct SslKernelSpec {
  SslKernelKind kind = SslKernelKind::kLaplacianPower;
  int r = 1;
  double sigma = 2.0;       // random walk / diffusion width
  double gamma = 0.0;       // K-scaling shift
  bool raw_recurrence = false;  // L D^{-1} only: skip the similarity transform
};

// Either an explicit matrix P, or L_norm together with the spectral function
// g such that P = g(L_norm).
struct SslKernel {
  SparseMatrix base;
  std::optional<Multiplier> spectral;
  double lambda_bound = 0.0;  // upper bound on the base matrix spectrum
  // Non-empty for L D^{-1} in similarity mode: P = S L_norm S^{-1} with
  // S = diag(similarity_scale).
  Vector similarity_scale;
};

SslKernel ssl_kernel(const WeightedGraph& g, const SslKernelSpec& spec);

struct SslResult {
  std::vector<int> predictions;  // per node, argmax class (lowest index wins ties)
  Matrix scores;                 // N x kappa solved label functions
  MessageSummary messages;
};

// One forward run per class with multiplier tau/(tau + g(lambda)) for
// spectral kernels or tau/(tau + lambda) for explicit matrices.
SslResult ssl_classify(const WeightedGraph& g, const LabelMatrix& labels,
                       const SslKernelSpec& spec, double tau, int order);

// Dense oracle: solve (tau I + P) F = tau Y directly.
Matrix ssl_solve_dense(const Matrix& p, const Matrix& y, double tau);

std::vector<int> argmax_rows(const Matrix& scores);

}  // namespace gcheb
