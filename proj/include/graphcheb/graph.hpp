#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphcheb/sparse.hpp"
#include "graphcheb/types.hpp"

namespace gcheb {

struct GraphEdge {
  int u = 0;  // u < v
  int v = 0;
  double weight = 0.0;
};

// Undirected weighted graph: no self-loops, each unordered pair at most once.
struct WeightedGraph {
  int node_count = 0;
  std::vector<std::array<double, 2>> coords;  // empty when the graph has none
  std::vector<GraphEdge> edges;

  Index edge_count() const { return static_cast<Index>(edges.size()); }
  SparseMatrix adjacency() const;
  Vector degrees() const;
  void validate() const;
};

enum class EdgeThreshold {
  kWeight,    // keep edge when exp(-d^2/(2 sigma^2)) >= kappa
  kDistance,  // keep edge when d <= kappa
};

// Random geometric sensor network: n nodes uniform in [0,1]^2, Gaussian
// kernel weights, thresholded. Bitwise deterministic per (n, sigma, kappa,
// seed, mode).
WeightedGraph build_geometric_graph(int n, double sigma, double kappa,
                                    std::uint64_t seed,
                                    EdgeThreshold mode = EdgeThreshold::kWeight);

// Same construction drawing coordinates from an existing stream (2n draws).
class Rng;
WeightedGraph build_geometric_graph(int n, double sigma, double kappa, Rng& rng,
                                    EdgeThreshold mode = EdgeThreshold::kWeight);

// L = D - W.
SparseMatrix laplacian(const WeightedGraph& g);

// D^{-1/2} L D^{-1/2}; throws on a zero-degree node.
SparseMatrix normalized_laplacian(const WeightedGraph& g);

// L D^{-1}: asymmetric; used in raw-recurrence mode only.
SparseMatrix random_walk_laplacian(const WeightedGraph& g);

// Upper bound on the largest Laplacian eigenvalue:
// max{d(m) + d(n) : m ~ n}.
double lambda_max_bound(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);

// f^T M^r f via r sparse mat-vec products followed by an inner product.
double smoothness(const SparseMatrix& m, const Vector& f, int r);

// File formats: graph as JSON {n, coords, edges}, signal as single-column
// CSV with a "value" header. Both round-trip at full double precision.
void save_graph_json(const WeightedGraph& g, const std::string& path);
WeightedGraph load_graph_json(const std::string& path);
void save_signal_csv(const Vector& f, const std::string& path);
Vector load_signal_csv(const std::string& path);

}  // namespace gcheb
