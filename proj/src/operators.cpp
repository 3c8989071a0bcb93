#include "esdg/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace esdg {

double legendre(int l, double x) {
  double pm1 = 1.0, p = x;
  if (l == 0) return 1.0;
  for (int m = 2; m <= l; ++m) {
    const double pm2 = pm1;
    pm1 = p;
    p = ((2 * m - 1) * x * pm1 - (m - 1) * pm2) / m;
  }
  return p;
}

double legendre_deriv(int l, double x) {
  if (l == 0) return 0.0;
  if (x == 1.0) return 0.5 * l * (l + 1);
  if (x == -1.0) return (l % 2 == 0 ? -1.0 : 1.0) * 0.5 * l * (l + 1);
  // (1-x^2) P_l' = l (P_{l-1} - x P_l)
  return l * (legendre(l - 1, x) - x * legendre(l, x)) / (1.0 - x * x);
}

namespace {

// Second derivative of P_l away from the endpoints:
// (1-x^2) P_l'' = 2x P_l' - l(l+1) P_l.
double legendre_deriv2(int l, double x) {
  return (2.0 * x * legendre_deriv(l, x) - l * (l + 1) * legendre(l, x)) /
         (1.0 - x * x);
}

// Interior Gauss-Lobatto nodes of an n-point rule are the roots of P_{n-1}'.
// Newton iteration from Chebyshev-Lobatto initial guesses.
Eigen::VectorXd lobatto_nodes(int n) {
  Eigen::VectorXd x(n);
  x(0) = -1.0;
  x(n - 1) = 1.0;
  const int l = n - 1;
  for (int j = 1; j < n - 1; ++j) {
    double xi = -std::cos(M_PI * j / (n - 1));
    for (int it = 0; it < 100; ++it) {
      const double f = legendre_deriv(l, xi);
      const double df = legendre_deriv2(l, xi);
      const double dx = f / df;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    x(j) = xi;
  }
  // enforce exact symmetry of the node set
  for (int j = 0; j < n / 2; ++j) {
    const double s = 0.5 * (x(n - 1 - j) - x(j));
    x(j) = -s;
    x(n - 1 - j) = s;
  }
  if (n % 2 == 1) x(n / 2) = 0.0;
  return x;
}

}  // namespace

Operators build_operators(int k) {
  if (k < 0 || k > 6) throw std::invalid_argument("build_operators: k must be in [0,6]");
  Operators ops;
  ops.k = k;
  ops.n = k + 2;
  const int n = ops.n;

  ops.nodes = lobatto_nodes(n);

  ops.weights.resize(n);
  for (int j = 0; j < n; ++j) {
    const double p = legendre(n - 1, ops.nodes(j));
    ops.weights(j) = 2.0 / (n * (n - 1) * p * p);
  }

  ops.tau = Eigen::VectorXd::Zero(n);
  ops.tau(0) = -1.0;
  ops.tau(n - 1) = 1.0;

  // Lagrange differentiation matrix via barycentric weights.
  Eigen::VectorXd c = Eigen::VectorXd::Ones(n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      if (l != j) c(j) *= ops.nodes(j) - ops.nodes(l);

  ops.D.setZero(n, n);
  for (int j = 0; j < n; ++j) {
    double rowsum = 0.0;
    for (int l = 0; l < n; ++l) {
      if (l == j) continue;
      ops.D(j, l) = (c(j) / c(l)) / (ops.nodes(j) - ops.nodes(l));
      rowsum += ops.D(j, l);
    }
    ops.D(j, j) = -rowsum;  // rows of D annihilate constants
  }

  ops.S = ops.weights.asDiagonal() * ops.D;

  ops.V.resize(n, n);
  ops.Vd.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      ops.V(i, l) = legendre(l, ops.nodes(i));
      ops.Vd(i, l) = legendre_deriv(l, ops.nodes(i));
    }

  return ops;
}

void gauss_legendre(int npts, Eigen::VectorXd& x, Eigen::VectorXd& w) {
  x.resize(npts);
  w.resize(npts);
  for (int j = 0; j < npts; ++j) {
    // Chebyshev initial guess, then Newton on P_n.
    double xi = -std::cos(M_PI * (j + 0.75) / (npts + 0.5));
    for (int it = 0; it < 100; ++it) {
      const double dx = legendre(npts, xi) / legendre_deriv(npts, xi);
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double dp = legendre_deriv(npts, xi);
    x(j) = xi;
    w(j) = 2.0 / ((1.0 - xi * xi) * dp * dp);
  }
  // symmetrize
  for (int j = 0; j < npts / 2; ++j) {
    const double s = 0.5 * (x(npts - 1 - j) - x(j));
    x(j) = -s;
    x(npts - 1 - j) = s;
    const double wm = 0.5 * (w(j) + w(npts - 1 - j));
    w(j) = w(npts - 1 - j) = wm;
  }
  if (npts % 2 == 1) x(npts / 2) = 0.0;
}

}  // namespace esdg
