#include <cmath>
#include <cstdio>

#include "doctest.h"
#include "graphcheb/cheb.hpp"
#include "graphcheb/filters.hpp"
#include "graphcheb/graph.hpp"
#include "graphcheb/verify.hpp"
#include "test_support.hpp"

using namespace gcheb;
using test::random_vector;
using test::two_node_graph;

namespace {

MultiplierUnion single(Multiplier m) {
  MultiplierUnion u;
  u.multipliers = {std::move(m)};
  return u;
}

const Multiplier kOne{[](double) { return 1.0; }, "one"};
const Multiplier kRamp{[](double x) { return x; }, "ramp"};

}  // namespace

TEST_CASE("coefficients of flat and linear multipliers") {
  const ChebyshevApprox flat = chebyshev_coefficients(single(kOne), 2.0, 6);
  CHECK(flat.coefficients(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  for (Index k = 1; k <= 6; ++k) CHECK(std::abs(flat.coefficients(0, k)) <= 1e-14);

  const ChebyshevApprox ramp = chebyshev_coefficients(single(kRamp), 2.0, 6);
  CHECK(ramp.coefficients(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ramp.coefficients(0, 1) == doctest::Approx(1.0).epsilon(1e-14));
  for (Index k = 2; k <= 6; ++k) CHECK(std::abs(ramp.coefficients(0, k)) <= 1e-14);
}

TEST_CASE("heat kernel coefficients match the Bessel closed form") {
  // On [0, 2] (alpha = 1) the expansion of e^{-x} has
  // c_k = 2 e^{-1} (-1)^k I_k(1).
  const ChebyshevApprox approx =
      chebyshev_coefficients(single(heat_multiplier(1.0)), 2.0, 10);
  for (Index k = 0; k <= 10; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double expected =
        2.0 * std::exp(-1.0) * sign * std::cyl_bessel_i(static_cast<double>(k), 1.0);
    CHECK(approx.coefficients(0, k) == doctest::Approx(expected).epsilon(1e-12));
  }

  // And against a much finer quadrature of the same integral.
  const ChebyshevApprox fine =
      chebyshev_coefficients(single(heat_multiplier(1.0)), 2.0, 10, 100000);
  CHECK((approx.coefficients - fine.coefficients).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("coefficient computation rejects bad inputs") {
  CHECK_THROWS_AS(chebyshev_coefficients(single(kOne), 2.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(chebyshev_coefficients(single(kOne), -1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(chebyshev_coefficients(single(kOne), 2.0, 10, 5),
                  std::invalid_argument);
  const Multiplier bad{[](double x) { return std::sqrt(x - 3.0); }, "nan"};
  CHECK_THROWS_WITH_AS(chebyshev_coefficients(single(bad), 2.0, 4),
                       "multiplier not evaluable", std::invalid_argument);
}

TEST_CASE("grid residual behaves like the sup error") {
  const ChebyshevApprox flat = chebyshev_coefficients(single(kOne), 2.0, 4);
  CHECK(residual_sup(single(kOne), flat) <= 1e-12);

  const ChebyshevApprox ramp = chebyshev_coefficients(single(kRamp), 2.0, 3);
  CHECK(residual_sup(single(kRamp), ramp) <= 1e-12);

  // Strict decay holds until the float noise floor.
  const MultiplierUnion heat = single(heat_multiplier(1.0));
  double previous = 1e300;
  for (int order : {2, 5, 10, 20, 40}) {
    const double r = residual_sup(heat, chebyshev_coefficients(heat, 2.0, order));
    if (previous > 1e-13) CHECK(r < previous);
    previous = r;
  }
  CHECK(previous <= 1e-13);
  CHECK_THROWS_AS(residual_sup(heat, chebyshev_coefficients(heat, 2.0, 4), 10),
                  std::invalid_argument);
}

TEST_CASE("analytic multiplier residual decays to the requested floor") {
  const MultiplierUnion heat = single(heat_multiplier(1.0));
  std::vector<double> residuals;
  for (int order : {5, 10, 20, 40}) {
    residuals.push_back(
        residual_sup(heat, chebyshev_coefficients(heat, 10.0, order), 5000));
  }
  for (std::size_t i = 1; i < residuals.size(); ++i) CHECK(residuals[i] < residuals[i - 1]);
  CHECK(residuals.back() <= 1e-8);
}

TEST_CASE("approximate application: exactness cases") {
  Rng rng(71);

  // Constant multipliers are reproduced exactly by the c_0 term.
  {
    const WeightedGraph g = random_connected_graph(rng, 5, 20);
    const SparseMatrix l = laplacian(g);
    const Multiplier c{[](double) { return -2.5; }, "constant"};
    const ChebyshevApprox approx =
        chebyshev_coefficients(single(c), lambda_max_bound(g), 5);
    const Vector f = random_vector(rng, l.size());
    CHECK((apply_approx(l, approx, f) + 2.5 * f).cwiseAbs().maxCoeff() <= 1e-13);
  }

  // Degree-1 exactness: the ramp multiplier reproduces L f.
  {
    const SparseMatrix l = laplacian(two_node_graph());
    const ChebyshevApprox approx = chebyshev_coefficients(single(kRamp), 2.0, 3);
    const Vector f{{1.0, 0.0}};
    const Vector out = apply_approx(l, approx, f);
    CHECK(out[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(out[1] == doctest::Approx(-1.0).epsilon(1e-14));
  }

  // Any polynomial of degree <= K is reproduced to rounding.
  {
    const WeightedGraph g = random_connected_graph(rng, 10, 30);
    const SparseMatrix l = laplacian(g);
    const double bound = lambda_max_bound(g);
    const double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1) / bound,
                 c = rng.uniform(-1, 1) / (bound * bound);
    const Multiplier quad{[=](double x) { return a + b * x + c * x * x; }, "quad"};
    const ChebyshevApprox approx = chebyshev_coefficients(single(quad), bound, 8);
    const Vector f = random_vector(rng, l.size());
    const Vector direct =
        a * f + b * l.multiply(f) + c * l.multiply(l.multiply(f));
    const Vector approximated = apply_approx(l, approx, f);
    CHECK((approximated - direct).norm() <= 1e-10 * (1.0 + direct.norm()));
  }
}

TEST_CASE("approximate application tracks the spectral oracle") {
  Rng rng(73);
  const WeightedGraph g = random_connected_graph(rng, 50, 50);
  const SparseMatrix l = laplacian(g);
  const double bound = lambda_max_bound(g);
  const SpectralDecomposition d = eigendecompose(l);
  const MultiplierUnion u = single(heat_multiplier(1.0));
  const ChebyshevApprox approx = chebyshev_coefficients(u, bound, 20);
  const Vector f = random_vector(rng, l.size());
  const Vector exact = apply_union_exact(d, u, f);
  const Vector approximate = apply_approx(l, approx, f);
  CHECK((approximate - exact).norm() <= 1e-3 * exact.norm());
}

TEST_CASE("approximate application is linear") {
  Rng rng(79);
  const WeightedGraph g = random_connected_graph(rng, 8, 25);
  const SparseMatrix l = laplacian(g);
  const double bound = lambda_max_bound(g);
  const MultiplierUnion u = random_union(rng, 3, bound);
  const ChebyshevApprox approx = chebyshev_coefficients(u, bound, 12);
  const Vector f = random_vector(rng, l.size());
  const Vector h = random_vector(rng, l.size());
  const double a = 1.375, b = -0.625;
  const Vector combined = apply_approx(l, approx, a * f + b * h);
  const Vector split = a * apply_approx(l, approx, f) + b * apply_approx(l, approx, h);
  CHECK((combined - split).norm() <= 1e-12 * (1.0 + combined.norm()));
}

TEST_CASE("adjoint of the approximate operator") {
  Rng rng(83);
  const WeightedGraph g = random_connected_graph(rng, 10, 10);
  const SparseMatrix l = laplacian(g);
  const double bound = lambda_max_bound(g);
  const Index n = l.size();
  const MultiplierUnion u = random_union(rng, 3, bound);
  const ChebyshevApprox approx = chebyshev_coefficients(u, bound, 9);

  // Exact adjoint identity.
  for (int c = 0; c < 5; ++c) {
    const Vector f = random_vector(rng, n);
    const Vector a = random_vector(rng, 3 * n);
    const double lhs = apply_approx(l, approx, f).dot(a);
    const double rhs = f.dot(apply_adjoint_approx(l, approx, a));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }

  // eta = 1 flat multiplier returns the input.
  const ChebyshevApprox flat = chebyshev_coefficients(single(kOne), bound, 4);
  const Vector a1 = random_vector(rng, n);
  CHECK((apply_adjoint_approx(l, flat, a1) - a1).cwiseAbs().maxCoeff() <= 1e-13);

  // Dense transpose oracle.
  Matrix dense(3 * n, n);
  for (Index i = 0; i < n; ++i) {
    dense.col(i) = apply_approx(l, approx, Vector::Unit(n, i));
  }
  const Vector a = random_vector(rng, 3 * n);
  CHECK((apply_adjoint_approx(l, approx, a) - dense.transpose() * a).cwiseAbs().maxCoeff() <=
        1e-11);
}

TEST_CASE("gram coefficients expand the squared expansion") {
  // Flat multiplier: only d_0 = 2 survives.
  const ChebyshevApprox flat = chebyshev_coefficients(single(kOne), 2.0, 3);
  const GramCoefficients gram_flat = gram_coefficients(flat);
  CHECK(gram_flat.d[0] == doctest::Approx(2.0).epsilon(1e-13));
  for (Index k = 1; k < gram_flat.d.size(); ++k) CHECK(std::abs(gram_flat.d[k]) <= 1e-13);

  // Ramp multiplier on [0,2]: the square is x^2; check on a grid.
  const ChebyshevApprox ramp = chebyshev_coefficients(single(kRamp), 2.0, 2);
  const GramCoefficients gram_ramp = gram_coefficients(ramp);
  ChebyshevApprox gram_as_approx;
  gram_as_approx.lambda_max = 2.0;
  gram_as_approx.coefficients = gram_ramp.d.transpose();
  for (int i = 0; i <= 50; ++i) {
    const double x = 2.0 * i / 50.0;
    CHECK(evaluate_approx(gram_as_approx, 0, x) ==
          doctest::Approx(x * x).epsilon(1e-12));
  }

  // Random coefficients: grid identity between sum of squares and the
  // product-expanded series.
  Rng rng(89);
  ChebyshevApprox random_approx;
  random_approx.lambda_max = 3.0;
  random_approx.coefficients = Matrix(2, 5);
  for (Index j = 0; j < 2; ++j) {
    for (Index k = 0; k < 5; ++k) random_approx.coefficients(j, k) = rng.uniform(-1, 1);
  }
  const GramCoefficients gram = gram_coefficients(random_approx);
  ChebyshevApprox gram_eval;
  gram_eval.lambda_max = 3.0;
  gram_eval.coefficients = gram.d.transpose();
  for (int i = 0; i <= 100; ++i) {
    const double x = 3.0 * i / 100.0;
    double sum_squares = 0.0;
    for (Index j = 0; j < 2; ++j) {
      const double p = evaluate_approx(random_approx, j, x);
      sum_squares += p * p;
    }
    CHECK(evaluate_approx(gram_eval, 0, x) ==
          doctest::Approx(sum_squares).epsilon(1e-10));
  }
}

TEST_CASE("gram application equals adjoint of forward") {
  Rng rng(97);
  const WeightedGraph g = random_connected_graph(rng, 10, 40);
  const SparseMatrix l = laplacian(g);
  const double bound = lambda_max_bound(g);
  const MultiplierUnion u = random_union(rng, 4, bound);
  const ChebyshevApprox approx = chebyshev_coefficients(u, bound, 10);

  for (int c = 0; c < 5; ++c) {
    const Vector f = random_vector(rng, l.size());
    const Vector two_step = apply_adjoint_approx(l, approx, apply_approx(l, approx, f));
    const Vector one_pass = apply_gram_approx(l, approx, f);
    CHECK((one_pass - two_step).norm() <= 1e-9 * (1.0 + two_step.norm()));
  }

  const ChebyshevApprox flat = chebyshev_coefficients(single(kOne), bound, 4);
  const Vector f = random_vector(rng, l.size());
  CHECK((apply_gram_approx(l, flat, f) - f).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(apply_gram_approx(l, approx, Vector::Zero(l.size())).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("spectral-norm bound on the approximation error") {
  Rng rng(101);
  const WeightedGraph g = random_connected_graph(rng, 12, 25);
  const SparseMatrix l = laplacian(g);
  const double bound = lambda_max_bound(g);
  const SpectralDecomposition d = eigendecompose(l);

  // Flat multiplier: both sides vanish.
  const MultiplierUnion flat = single(kOne);
  const SpectralBoundCheck zero =
      verify_spectral_bound(d, flat, chebyshev_coefficients(flat, bound, 4));
  CHECK(zero.lhs <= 1e-12);
  CHECK(zero.rhs <= 1e-12);

  // Heat kernel: bound holds and tightens with the order.
  const MultiplierUnion heat = single(heat_multiplier(1.0));
  const SpectralBoundCheck k5 =
      verify_spectral_bound(d, heat, chebyshev_coefficients(heat, bound, 5));
  const SpectralBoundCheck k20 =
      verify_spectral_bound(d, heat, chebyshev_coefficients(heat, bound, 20));
  CHECK(k5.lhs <= k5.rhs + 1e-8);
  CHECK(k20.lhs <= k20.rhs + 1e-8);
  CHECK(k20.lhs < k5.lhs);

  // Doubling a multiplier scales the right side by sqrt(2).
  MultiplierUnion doubled;
  doubled.multipliers = {heat_multiplier(1.0), heat_multiplier(1.0)};
  const SpectralBoundCheck twice =
      verify_spectral_bound(d, doubled, chebyshev_coefficients(doubled, bound, 5));
  CHECK(twice.rhs == doctest::Approx(std::sqrt(2.0) * k5.rhs).epsilon(1e-10));
}

TEST_CASE("coefficients survive a JSON round trip") {
  Rng rng(103);
  const MultiplierUnion u = random_union(rng, 3, 7.5);
  const ChebyshevApprox approx = chebyshev_coefficients(u, 7.5, 11);
  const std::string path = "/tmp/graphcheb_coeffs_test.json";
  save_coefficients_json(approx, path);
  const ChebyshevApprox loaded = load_coefficients_json(path);
  CHECK(loaded.lambda_max == approx.lambda_max);
  REQUIRE(loaded.eta() == approx.eta());
  REQUIRE(loaded.order() == approx.order());
  CHECK((loaded.coefficients - approx.coefficients).cwiseAbs().maxCoeff() == 0.0);
  std::remove(path.c_str());
}
