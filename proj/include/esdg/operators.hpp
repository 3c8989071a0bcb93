// Collocation operators for a nodal basis on Gauss-Lobatto points.
//
// A degree-k DG space is sampled at the k+2 Gauss-Lobatto nodes of [-1,1],
// so the quadrature rule is exact for degree 2k+1 and the pair (M, D) is a
// summation-by-parts pair: with S = M*D and B = diag(-1,0,...,0,1),
//   S + S^T = B   (exactly, up to round-off).

#pragma once

#include <Eigen/Dense>

namespace esdg {

struct Operators {
  int k = 0;  // polynomial degree of the DG space
  int n = 2;  // nodes per direction, n = k+2

  Eigen::VectorXd nodes;    // ascending Gauss-Lobatto nodes in [-1,1]
  Eigen::VectorXd weights;  // quadrature weights (M = diag(weights))
  Eigen::VectorXd tau;      // boundary signs (-1, 0, ..., 0, +1)
  Eigen::MatrixXd D;        // D(j,l) = phi_l'(X_j), Lagrange basis phi
  Eigen::MatrixXd S;        // M * D
  Eigen::MatrixXd V;        // V(i,l) = P_l(X_i), Legendre Vandermonde
  Eigen::MatrixXd Vd;       // Vd(i,l) = P_l'(X_i)
};

// Builds all operators for degree k (supported range 0..6).
Operators build_operators(int k);

// npts-point Gauss-Legendre rule on [-1,1] (used for edge projections).
void gauss_legendre(int npts, Eigen::VectorXd& x, Eigen::VectorXd& w);

// Legendre polynomial P_l and its derivative at a point.
double legendre(int l, double x);
double legendre_deriv(int l, double x);

}  // namespace esdg
