#include "esdg/reconstruct.hpp"

#include <lapacke.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace esdg {

namespace {

// thin wrapper over LAPACK's divide-and-conquer SVD, full U and V^T
void svd_full(const Eigen::MatrixXd& A, Eigen::MatrixXd& U, Eigen::VectorXd& s,
              Eigen::MatrixXd& VT) {
  const lapack_int m = static_cast<lapack_int>(A.rows());
  const lapack_int nn = static_cast<lapack_int>(A.cols());
  Eigen::MatrixXd work = A;  // dgesdd destroys its input
  U.resize(m, m);
  VT.resize(nn, nn);
  s.resize(std::min(m, nn));
  const lapack_int info =
      LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'A', m, nn, work.data(), m, s.data(),
                     U.data(), m, VT.data(), nn);
  if (info != 0) throw std::runtime_error("SVD failed to converge");
}

}  // namespace

ReconOperator build_recon(const Operators& ops, double aspect) {
  const int n = ops.n;
  const int k = ops.k;
  const int n2 = n * n;
  const int m = n2 + 4 * n;
  const int ne = k + 1;  // coefficients per edge

  ReconOperator R;
  R.k = k;
  R.n = n;
  R.aspect = aspect;

  // Constraint rows: nodal divergence (scaled by dy/2 so the x-part carries
  // dy/dx), then the edge traces in the order right, left, top, bottom.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, 2 * n2);
  for (int j1 = 0; j1 < n; ++j1) {
    for (int i1 = 0; i1 < n; ++i1) {
      const int row = j1 * n + i1;
      for (int l = 0; l < n; ++l) {
        A(row, j1 * n + l) += aspect * ops.D(i1, l);   // d(bx)/dx
        A(row, n2 + l * n + i1) += ops.D(j1, l);       // d(by)/dy
      }
    }
  }
  for (int j1 = 0; j1 < n; ++j1) {
    A(n2 + j1, j1 * n + (n - 1)) = 1.0;  // bx at x = +1
    A(n2 + n + j1, j1 * n + 0) = 1.0;    // bx at x = -1
  }
  for (int i1 = 0; i1 < n; ++i1) {
    A(n2 + 2 * n + i1, n2 + (n - 1) * n + i1) = 1.0;  // by at y = +1
    A(n2 + 3 * n + i1, n2 + 0 * n + i1) = 1.0;        // by at y = -1
  }
  R.A = A;

  Eigen::MatrixXd U, VT;
  Eigen::VectorXd sv;
  svd_full(A, U, sv, VT);

  const double smax = sv.size() ? sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-10 * smax) ++rank;
  if (m - rank != 4)
    throw std::runtime_error("unexpected constraint null-space dimension");
  R.rank = rank;

  Eigen::MatrixXd A1(rank, 2 * n2);
  for (int r = 0; r < rank; ++r) A1.row(r) = sv(r) * VT.row(r);
  const Eigen::MatrixXd U1 = U.leftCols(rank);
  const Eigen::MatrixXd U2 = U.rightCols(m - rank);

  // quadrature weights of the nodal inner product, duplicated for (bx, by)
  Eigen::VectorXd w2(2 * n2);
  for (int j1 = 0; j1 < n; ++j1)
    for (int i1 = 0; i1 < n; ++i1)
      w2(j1 * n + i1) = w2(n2 + j1 * n + i1) =
          ops.weights(i1) * ops.weights(j1);
  const Eigen::VectorXd wi = w2.cwiseInverse();

  const int gsz = 2 * n2 + rank;
  R.G = Eigen::MatrixXd::Zero(gsz, gsz);
  R.G.topLeftCorner(2 * n2, 2 * n2) = w2.asDiagonal();
  R.G.topRightCorner(2 * n2, rank) = A1.transpose();
  R.G.bottomLeftCorner(rank, 2 * n2) = A1;

  // inverse via the Schur complement S = (A1 M^-1 A1^T)^-1
  const Eigen::MatrixXd AMi = A1 * wi.asDiagonal();           // A1 M^-1
  const Eigen::MatrixXd S = (AMi * A1.transpose()).ldlt().solve(
      Eigen::MatrixXd::Identity(rank, rank));
  R.Ginv.resize(gsz, gsz);
  R.Ginv.topLeftCorner(2 * n2, 2 * n2) =
      Eigen::MatrixXd(wi.asDiagonal()) - AMi.transpose() * S * AMi;
  R.Ginv.topRightCorner(2 * n2, rank) = AMi.transpose() * S;
  R.Ginv.bottomLeftCorner(rank, 2 * n2) = S * AMi;
  R.Ginv.bottomRightCorner(rank, rank) = -S;

  // per-cell operators
  R.T_prior = Eigen::MatrixXd::Identity(2 * n2, 2 * n2) -
              AMi.transpose() * S * A1;

  // E maps stacked edge coefficients to the constraint right-hand side:
  // zero divergence rows, then the edge polynomials sampled at the nodes
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(m, 4 * ne);
  const Eigen::MatrixXd Ve = ops.V.leftCols(ne);
  E.block(n2 + 0 * n, 0 * ne, n, ne) = Ve;
  E.block(n2 + 1 * n, 1 * ne, n, ne) = Ve;
  E.block(n2 + 2 * n, 2 * ne, n, ne) = Ve;
  E.block(n2 + 3 * n, 3 * ne, n, ne) = Ve;
  R.T_edge = R.Ginv.topRightCorner(2 * n2, rank) * (U1.transpose() * E);
  R.feas = U2.transpose() * E;
  return R;
}

Eigen::VectorXd recon_apply(const ReconOperator& R,
                            const Eigen::VectorXd& Btilde,
                            const Eigen::VectorXd& e) {
  const double escale = std::max(1.0, e.lpNorm<Eigen::Infinity>());
  const double viol = (R.feas * e).lpNorm<Eigen::Infinity>();
  if (viol > 1e-9 * escale) {
    std::ostringstream msg;
    msg << "incompatible interface data in magnetic reconstruction "
           "(violation "
        << viol << ")";
    throw std::runtime_error(msg.str());
  }
  return R.T_prior * Btilde + R.T_edge * e;
}

double reconstruct_field(CellField& U, const EdgeField& b, const Mesh& mesh,
                         const Operators& ops, const ReconOperator& R) {
  const int n = ops.n;
  const int n2 = n * n;
  const int ne = R.k + 1;
  const double cellw = 0.25 * mesh.dx() * mesh.dy();

  Eigen::VectorXd Btilde(2 * n2), e(4 * ne);
  double ecorr = 0.0;
  for (int cj = 0; cj < mesh.ny; ++cj) {
    for (int ci = 0; ci < mesh.nx; ++ci) {
      const double* rx = b.bx_at(mesh, ci + 1, cj);
      const double* lx = b.bx_at(mesh, ci, cj);
      const double* ty = b.by_at(mesh, ci, cj + 1);
      const double* by0 = b.by_at(mesh, ci, cj);
      for (int c = 0; c < ne; ++c) {
        e(0 * ne + c) = rx[c];
        e(1 * ne + c) = lx[c];
        e(2 * ne + c) = ty[c];
        e(3 * ne + c) = by0[c];
      }
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1) {
          const double* p = U.node_ptr(ci, cj, i1, j1);
          Btilde(j1 * n + i1) = p[BX];
          Btilde(n2 + j1 * n + i1) = p[BY];
        }

      const Eigen::VectorXd B = recon_apply(R, Btilde, e);

      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1) {
          double* p = U.node_ptr(ci, cj, i1, j1);
          const double nbx = B(j1 * n + i1);
          const double nby = B(n2 + j1 * n + i1);
          const double de = 0.5 * (nbx * nbx + nby * nby) -
                            0.5 * (p[BX] * p[BX] + p[BY] * p[BY]);
          p[BX] = nbx;
          p[BY] = nby;
          p[EN] += de;
          ecorr += cellw * ops.weights(i1) * ops.weights(j1) * de;
        }
    }
  }
  return ecorr;
}

}  // namespace esdg
