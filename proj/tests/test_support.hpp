#pragma once

#include <vector>

#include "graphcheb/graph.hpp"
#include "graphcheb/rng.hpp"
#include "graphcheb/types.hpp"

namespace gcheb::test {

inline WeightedGraph path_graph(int n, double weight = 1.0) {
  WeightedGraph g;
  g.node_count = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1, weight});
  return g;
}

inline WeightedGraph two_node_graph(double weight = 1.0) {
  WeightedGraph g;
  g.node_count = 2;
  g.edges.push_back({0, 1, weight});
  return g;
}

inline WeightedGraph complete_graph(int n, double weight = 1.0) {
  WeightedGraph g;
  g.node_count = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, weight});
  }
  return g;
}

inline WeightedGraph star_graph(int leaves, double weight = 1.0) {
  WeightedGraph g;
  g.node_count = leaves + 1;
  for (int i = 1; i <= leaves; ++i) g.edges.push_back({0, i, weight});
  return g;
}

inline Vector random_vector(Rng& rng, Index n, double lo = -1.0, double hi = 1.0) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = rng.uniform(lo, hi);
  return v;
}

}  // namespace gcheb::test
