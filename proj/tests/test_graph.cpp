#include <cmath>

#include "doctest.h"
#include "graphcheb/graph.hpp"
#include "graphcheb/rng.hpp"
#include "graphcheb/spectral.hpp"
#include "graphcheb/verify.hpp"
#include "test_support.hpp"

using namespace gcheb;
using test::path_graph;
using test::star_graph;
using test::two_node_graph;

TEST_CASE("geometric graph weights follow the Gaussian kernel") {
  // Distance mode with a threshold covering the whole square: every pair is
  // an edge, so each stored weight can be checked against the coordinates.
  const WeightedGraph g =
      build_geometric_graph(12, 0.3, 2.0, 7u, EdgeThreshold::kDistance);
  CHECK(g.edge_count() == 12 * 11 / 2);
  for (const GraphEdge& e : g.edges) {
    const double dx = g.coords[e.u][0] - g.coords[e.v][0];
    const double dy = g.coords[e.u][1] - g.coords[e.v][1];
    const double expected = std::exp(-(dx * dx + dy * dy) / (2.0 * 0.3 * 0.3));
    CHECK(e.weight == doctest::Approx(expected).epsilon(1e-15));
  }
  // Zero separation gives weight exactly 1.
  CHECK(std::exp(-0.0 / (2.0 * 0.3 * 0.3)) == 1.0);
}

TEST_CASE("weight threshold 0.6 at sigma 0.074 cuts near distance 0.075") {
  const double sigma = 0.074;
  const double kappa = 0.600;
  const double cutoff = sigma * std::sqrt(2.0 * std::log(1.0 / kappa));
  CHECK(cutoff == doctest::Approx(0.0748).epsilon(1e-2));
  CHECK(cutoff < 0.075);

  const WeightedGraph g = build_geometric_graph(300, sigma, kappa, 11u);
  for (const GraphEdge& e : g.edges) {
    const double dx = g.coords[e.u][0] - g.coords[e.v][0];
    const double dy = g.coords[e.u][1] - g.coords[e.v][1];
    CHECK(std::sqrt(dx * dx + dy * dy) <= cutoff * (1.0 + 1e-12));
  }
}

TEST_CASE("geometric graph is bitwise deterministic per seed") {
  const WeightedGraph a = build_geometric_graph(80, 0.12, 0.5, 123u);
  const WeightedGraph b = build_geometric_graph(80, 0.12, 0.5, 123u);
  REQUIRE(a.edges.size() == b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    CHECK(a.edges[i].u == b.edges[i].u);
    CHECK(a.edges[i].v == b.edges[i].v);
    CHECK(a.edges[i].weight == b.edges[i].weight);
  }
  for (int i = 0; i < a.node_count; ++i) {
    CHECK(a.coords[i][0] == b.coords[i][0]);
    CHECK(a.coords[i][1] == b.coords[i][1]);
  }
  const WeightedGraph c = build_geometric_graph(80, 0.12, 0.5, 124u);
  CHECK(a.edges.size() != c.edges.size());
}

TEST_CASE("paper-scale geometric graph matches the all-pairs oracle") {
  const WeightedGraph g = build_geometric_graph(500, 0.074, 0.600, 42u);
  // Independent all-pairs recount from the same coordinates.
  Index count = 0;
  for (int i = 0; i < g.node_count; ++i) {
    for (int j = i + 1; j < g.node_count; ++j) {
      const double dx = g.coords[i][0] - g.coords[j][0];
      const double dy = g.coords[i][1] - g.coords[j][1];
      const double w = std::exp(-(dx * dx + dy * dy) / (2.0 * 0.074 * 0.074));
      if (w >= 0.600) ++count;
    }
  }
  CHECK(g.edge_count() == count);
}

TEST_CASE("laplacian of small graphs") {
  const SparseMatrix l2 = laplacian(two_node_graph());
  CHECK(l2.to_dense() == Matrix{{1.0, -1.0}, {-1.0, 1.0}});

  const SparseMatrix l3 = laplacian(path_graph(3));
  const Vector f{{1.0, 0.0, 0.0}};
  const Vector lf = l3.multiply(f);
  CHECK(lf[0] == 1.0);
  CHECK(lf[1] == -1.0);
  CHECK(lf[2] == 0.0);

  // Constant signals are annihilated.
  Rng rng(5);
  const WeightedGraph g = random_connected_graph(rng, 10, 30);
  const Vector ones = Vector::Ones(g.node_count);
  CHECK(laplacian(g).multiply(ones).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("laplacian row sums vanish on generated graphs") {
  Rng rng(17);
  for (int c = 0; c < 20; ++c) {
    const WeightedGraph g = random_connected_graph(rng, 5, 50);
    CHECK(laplacian(g).row_sums().cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(laplacian(g).symmetry_error() <= 1e-12);
  }
}

TEST_CASE("normalized laplacian") {
  CHECK(normalized_laplacian(two_node_graph()).to_dense() ==
        Matrix{{1.0, -1.0}, {-1.0, 1.0}});

  const SpectralDecomposition d =
      eigendecompose(normalized_laplacian(test::complete_graph(3)));
  CHECK(d.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(d.eigenvalues[1] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(d.eigenvalues[2] == doctest::Approx(1.5).epsilon(1e-12));

  // Smallest eigenvalue 0 with eigenvector proportional to D^{1/2} 1.
  Rng rng(3);
  const WeightedGraph g = random_connected_graph(rng, 8, 20);
  const SpectralDecomposition dn = eigendecompose(normalized_laplacian(g));
  CHECK(std::abs(dn.eigenvalues[0]) <= 1e-10);
  Vector expected = g.degrees().array().sqrt();
  expected.normalize();
  const double overlap = std::abs(expected.dot(dn.eigenvectors.col(0)));
  CHECK(overlap == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dn.eigenvalues[dn.size() - 1] <= 2.0 + 1e-10);

  WeightedGraph isolated;
  isolated.node_count = 3;
  isolated.edges.push_back({0, 1, 1.0});
  CHECK_THROWS_WITH_AS(normalized_laplacian(isolated), "zero-degree node",
                       std::invalid_argument);
}

TEST_CASE("edge-degree bound dominates the spectrum") {
  CHECK(lambda_max_bound(two_node_graph()) == 2.0);
  CHECK(lambda_max_bound(path_graph(3)) == 3.0);
  CHECK(eigendecompose(laplacian(path_graph(3))).lambda_max() ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(lambda_max_bound(star_graph(4)) == 5.0);
  CHECK(eigendecompose(laplacian(star_graph(4))).lambda_max() ==
        doctest::Approx(5.0).epsilon(1e-12));

  Rng rng(29);
  for (int c = 0; c < 200; ++c) {
    const WeightedGraph g = random_connected_graph(rng, 4, 60);
    const double bound = lambda_max_bound(g);
    const double exact = eigendecompose(laplacian(g)).lambda_max();
    CHECK(bound >= exact - 1e-9);
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(two_node_graph()));

  WeightedGraph no_edges;
  no_edges.node_count = 2;
  CHECK_FALSE(is_connected(no_edges));

  // Two triangles joined by one edge.
  WeightedGraph bridged;
  bridged.node_count = 6;
  bridged.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0},
                   {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}};
  CHECK_FALSE(is_connected(bridged));
  bridged.edges.push_back({2, 3, 1.0});
  CHECK(is_connected(bridged));
}

TEST_CASE("smoothness quadratic form") {
  Rng rng(31);
  const WeightedGraph g = random_connected_graph(rng, 10, 40);
  const SparseMatrix l = laplacian(g);

  const Vector constant = Vector::Constant(g.node_count, 3.25);
  CHECK(std::abs(smoothness(l, constant, 1)) <= 1e-9);

  // r = 1 equals the weighted edge-difference sum.
  for (int c = 0; c < 10; ++c) {
    const Vector f = test::random_vector(rng, g.node_count);
    double edge_sum = 0.0;
    for (const GraphEdge& e : g.edges) {
      const double diff = f[e.u] - f[e.v];
      edge_sum += e.weight * diff * diff;
    }
    CHECK(smoothness(l, f, 1) == doctest::Approx(edge_sum).epsilon(1e-9));
  }

  // 2-node graph: L^2 = 2L, so f = (1, 0) gives 2.
  const SparseMatrix l2 = laplacian(two_node_graph());
  const Vector f{{1.0, 0.0}};
  CHECK(smoothness(l2, f, 2) == doctest::Approx(2.0).epsilon(1e-12));
}
