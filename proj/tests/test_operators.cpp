// Checks for the Lobatto collocation operators: node/weight tables,
// summation-by-parts identities and differentiation/quadrature exactness.

#include <cmath>

#include "doctest.h"
#include "esdg/operators.hpp"

using namespace esdg;

TEST_CASE("lobatto nodes and weights at low degree") {
  const Operators o0 = build_operators(0);
  REQUIRE(o0.n == 2);
  CHECK(o0.nodes[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(o0.nodes[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(o0.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(o0.weights[1] == doctest::Approx(1.0).epsilon(1e-14));

  const Operators o1 = build_operators(1);
  REQUIRE(o1.n == 3);
  CHECK(o1.nodes[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(o1.weights[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(o1.weights[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-14));

  const Operators o2 = build_operators(2);
  REQUIRE(o2.n == 4);
  CHECK(o2.nodes[1] == doctest::Approx(-std::sqrt(0.2)).epsilon(1e-14));
  CHECK(o2.weights[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(o2.weights[1] == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("derivative matrix at lowest degree") {
  const Operators o = build_operators(0);
  CHECK(o.D(0, 0) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(o.D(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(o.D(1, 0) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(o.D(1, 1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("summation by parts identities") {
  for (int k = 0; k <= 6; ++k) {
    const Operators o = build_operators(k);
    const Eigen::MatrixXd B = Eigen::MatrixXd(o.tau.asDiagonal());
    CHECK((o.S + o.S.transpose() - B).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(o.D.rowwise().sum().cwiseAbs().maxCoeff() < 1e-13);
    CHECK(o.S.rowwise().sum().cwiseAbs().maxCoeff() < 1e-13);
    // column sums of S reproduce the boundary signs
    const Eigen::VectorXd cs = o.S.colwise().sum().transpose();
    CHECK((cs - o.tau).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("differentiation is exact for polynomials") {
  for (int k = 0; k <= 5; ++k) {
    const Operators o = build_operators(k);
    for (int m = 0; m < o.n; ++m) {
      Eigen::VectorXd f(o.n), dfe(o.n);
      for (int i = 0; i < o.n; ++i) {
        f[i] = std::pow(o.nodes[i], m);
        dfe[i] = m == 0 ? 0.0 : m * std::pow(o.nodes[i], m - 1);
      }
      CHECK((o.D * f - dfe).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("quadrature exactness up to degree 2n-3") {
  for (int k = 1; k <= 5; ++k) {
    const Operators o = build_operators(k);
    for (int m = 0; m <= 2 * o.n - 3; ++m) {
      double q = 0.0;
      for (int i = 0; i < o.n; ++i)
        q += o.weights[i] * std::pow(o.nodes[i], m);
      const double exact = (m % 2 == 0) ? 2.0 / (m + 1) : 0.0;
      CHECK(q == doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("legendre vandermonde and its derivative") {
  const Operators o = build_operators(2);
  for (int i = 0; i < o.n; ++i) {
    const double x = o.nodes[i];
    CHECK(o.V(i, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(o.V(i, 1) == doctest::Approx(x).epsilon(1e-14));
    CHECK(o.V(i, 2) ==
          doctest::Approx(0.5 * (3 * x * x - 1)).epsilon(1e-13));
    CHECK(o.Vd(i, 2) == doctest::Approx(3 * x).epsilon(1e-13));
    CHECK(o.Vd(i, 3) ==
          doctest::Approx(0.5 * (15 * x * x - 3)).epsilon(1e-12));
  }
  // nodal derivative of a Legendre column matches the analytic one
  const Eigen::MatrixXd dv = o.D * o.V;
  CHECK((dv - o.Vd).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("gauss quadrature helper") {
  Eigen::VectorXd x, w;
  gauss_legendre(3, x, w);
  REQUIRE(x.size() == 3);
  CHECK(x[0] == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-14));
  CHECK(w[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
  double q = 0.0;
  for (int i = 0; i < 3; ++i) q += w[i] * std::pow(x[i], 4);
  CHECK(q == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("degree out of range is rejected") {
  CHECK_THROWS(build_operators(-1));
  CHECK_THROWS(build_operators(7));
}
