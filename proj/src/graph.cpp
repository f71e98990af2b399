#include "graphcheb/graph.hpp"

#include <cmath>
#include <fstream>
#include <queue>
#include <set>
#include <stdexcept>

#include "graphcheb/rng.hpp"
#include "json.hpp"

namespace gcheb {

SparseMatrix WeightedGraph::adjacency() const {
  std::vector<Triplet> entries;
  entries.reserve(edges.size() * 2);
  for (const GraphEdge& e : edges) {
    entries.push_back({e.u, e.v, e.weight});
    entries.push_back({e.v, e.u, e.weight});
  }
  return SparseMatrix::from_triplets(node_count, std::move(entries));
}

Vector WeightedGraph::degrees() const {
  Vector d = Vector::Zero(node_count);
  for (const GraphEdge& e : edges) {
    d[e.u] += e.weight;
    d[e.v] += e.weight;
  }
  return d;
}

void WeightedGraph::validate() const {
  if (node_count < 1) throw std::invalid_argument("graph needs at least one node");
  if (!coords.empty() && static_cast<int>(coords.size()) != node_count) {
    throw std::invalid_argument("coordinate count does not match node count");
  }
  std::set<std::pair<int, int>> seen;
  for (const GraphEdge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u >= e.v) throw std::invalid_argument("edges must satisfy u < v");
    if (e.weight <= 0.0) throw std::invalid_argument("edge weight must be positive");
    if (!seen.insert({e.u, e.v}).second) {
      throw std::invalid_argument("duplicate edge");
    }
  }
}

WeightedGraph build_geometric_graph(int n, double sigma, double kappa,
                                    std::uint64_t seed, EdgeThreshold mode) {
  Rng rng(seed);
  return build_geometric_graph(n, sigma, kappa, rng, mode);
}

WeightedGraph build_geometric_graph(int n, double sigma, double kappa, Rng& rng,
                                    EdgeThreshold mode) {
  if (n < 2) throw std::invalid_argument("need at least two nodes");
  if (sigma <= 0.0) throw std::invalid_argument("sigma must be positive");
  if (mode == EdgeThreshold::kWeight && (kappa <= 0.0 || kappa >= 1.0)) {
    throw std::invalid_argument("weight threshold must lie in (0, 1)");
  }
  if (mode == EdgeThreshold::kDistance && kappa <= 0.0) {
    throw std::invalid_argument("distance threshold must be positive");
  }

  WeightedGraph g;
  g.node_count = n;
  g.coords.resize(static_cast<std::size_t>(n));
  for (auto& c : g.coords) {
    c[0] = rng.uniform();
    c[1] = rng.uniform();
  }

  const double inv_two_sigma_sq = 1.0 / (2.0 * sigma * sigma);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = g.coords[i][0] - g.coords[j][0];
      const double dy = g.coords[i][1] - g.coords[j][1];
      const double dist_sq = dx * dx + dy * dy;
      const double w = std::exp(-dist_sq * inv_two_sigma_sq);
      const bool keep = (mode == EdgeThreshold::kWeight)
                            ? (w >= kappa)
                            : (dist_sq <= kappa * kappa);
      if (keep) g.edges.push_back({i, j, w});
    }
  }
  return g;
}

SparseMatrix laplacian(const WeightedGraph& g) {
  g.validate();
  const Vector d = g.degrees();
  std::vector<Triplet> entries;
  entries.reserve(g.edges.size() * 2 + static_cast<std::size_t>(g.node_count));
  for (const GraphEdge& e : g.edges) {
    entries.push_back({e.u, e.v, -e.weight});
    entries.push_back({e.v, e.u, -e.weight});
  }
  for (int i = 0; i < g.node_count; ++i) entries.push_back({i, i, d[i]});
  return SparseMatrix::from_triplets(g.node_count, std::move(entries));
}

SparseMatrix normalized_laplacian(const WeightedGraph& g) {
  g.validate();
  const Vector d = g.degrees();
  for (Index i = 0; i < d.size(); ++i) {
    if (d[i] <= 0.0) throw std::invalid_argument("zero-degree node");
  }
  std::vector<Triplet> entries;
  for (const GraphEdge& e : g.edges) {
    const double w = -e.weight / std::sqrt(d[e.u] * d[e.v]);
    entries.push_back({e.u, e.v, w});
    entries.push_back({e.v, e.u, w});
  }
  for (int i = 0; i < g.node_count; ++i) entries.push_back({i, i, 1.0});
  return SparseMatrix::from_triplets(g.node_count, std::move(entries));
}

SparseMatrix random_walk_laplacian(const WeightedGraph& g) {
  g.validate();
  const Vector d = g.degrees();
  for (Index i = 0; i < d.size(); ++i) {
    if (d[i] <= 0.0) throw std::invalid_argument("zero-degree node");
  }
  std::vector<Triplet> entries;
  for (const GraphEdge& e : g.edges) {
    entries.push_back({e.u, e.v, -e.weight / d[e.v]});
    entries.push_back({e.v, e.u, -e.weight / d[e.u]});
  }
  for (int i = 0; i < g.node_count; ++i) entries.push_back({i, i, 1.0});
  return SparseMatrix::from_triplets(g.node_count, std::move(entries));
}

double lambda_max_bound(const WeightedGraph& g) {
  const Vector d = g.degrees();
  double bound = 0.0;
  for (const GraphEdge& e : g.edges) {
    bound = std::max(bound, d[e.u] + d[e.v]);
  }
  return bound;
}

bool is_connected(const WeightedGraph& g) {
  if (g.node_count <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.node_count));
  for (const GraphEdge& e : g.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(static_cast<std::size_t>(g.node_count), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++visited;
        frontier.push(v);
      }
    }
  }
  return visited == g.node_count;
}

double smoothness(const SparseMatrix& m, const Vector& f, int r) {
  if (r < 1) throw std::invalid_argument("power must be >= 1");
  if (f.size() != m.size()) throw std::invalid_argument("signal size mismatch");
  Vector y = f;
  for (int k = 0; k < r; ++k) y = m.multiply(y);
  return f.dot(y);
}

void save_graph_json(const WeightedGraph& g, const std::string& path) {
  nlohmann::json j;
  j["n"] = g.node_count;
  j["coords"] = nlohmann::json::array();
  for (const auto& c : g.coords) j["coords"].push_back({c[0], c[1]});
  j["edges"] = nlohmann::json::array();
  for (const GraphEdge& e : g.edges) j["edges"].push_back({e.u, e.v, e.weight});
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

WeightedGraph load_graph_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  in >> j;
  WeightedGraph g;
  g.node_count = j.at("n").get<int>();
  if (j.contains("coords")) {
    for (const auto& c : j["coords"]) {
      g.coords.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
    }
  }
  for (const auto& e : j.at("edges")) {
    g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
  }
  g.validate();
  return g;
}

void save_signal_csv(const Vector& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "value\n";
  char buf[64];
  for (Index i = 0; i < f.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", f[i]);
    out << buf << '\n';
  }
}

Vector load_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  if (!std::getline(in, line) || line.find("value") == std::string::npos) {
    throw std::runtime_error("signal CSV must start with a 'value' header");
  }
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    values.push_back(std::stod(line));
  }
  Vector f(static_cast<Index>(values.size()));
  for (Index i = 0; i < f.size(); ++i) f[i] = values[static_cast<std::size_t>(i)];
  return f;
}

}  // namespace gcheb
