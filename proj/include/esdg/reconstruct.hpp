// Constrained least-squares recovery of the in-cell magnetic field from the
// interface normal-field polynomials.
//
// Unknowns are the 2*n^2 nodal values (Bx, By) of one cell.  Constraints:
// the nodal divergence vanishes at every tensor node (which makes the
// degree-(k+1) divergence polynomial vanish identically) and the traces on
// the four edges match the stored degree-k interface polynomials.  The
// constraint matrix has a 4-dimensional left null space (edge data must
// satisfy four compatibility conditions, e.g. the net-flux condition), so
// the system is reduced by SVD to its full-rank part and solved as an
// equality-constrained minimisation of the quadrature-weighted distance to
// the prior nodal field via the KKT system.

#pragma once

#include <Eigen/Dense>

#include "esdg/grid.hpp"
#include "esdg/operators.hpp"

namespace esdg {

struct ReconOperator {
  int k = 0, n = 0;
  int rank = 0;       // row rank of the constraint matrix
  double aspect = 1;  // dy/dx baked into the divergence rows
  Eigen::MatrixXd A;  // full constraint matrix, (n^2 + 4n) x 2n^2
  Eigen::MatrixXd G;     // KKT matrix, (2n^2 + rank) square
  Eigen::MatrixXd Ginv;  // its inverse (closed-form block expression)
  // per-cell application: B = T_prior * Btilde + T_edge * e,
  // where e stacks the edge coefficients [bx_right; bx_left; by_top; by_bot]
  Eigen::MatrixXd T_prior;  // 2n^2 x 2n^2
  Eigen::MatrixXd T_edge;   // 2n^2 x 4(k+1)
  Eigen::MatrixXd feas;     // 4 x 4(k+1); ||feas*e|| must vanish
};

ReconOperator build_recon(const Operators& ops, double aspect);

// Solves one cell: Btilde and the result stack bx nodal values (n^2, x-node
// fastest) then by.  Throws if e violates the compatibility conditions.
Eigen::VectorXd recon_apply(const ReconOperator& R,
                            const Eigen::VectorXd& Btilde,
                            const Eigen::VectorXd& e);

// Replaces the nodal (Bx, By) of every cell by the constrained
// reconstruction and patches the total energy pointwise so the pressure is
// unchanged.  Returns the quadrature-weighted total energy added, i.e. the
// contribution to the cumulative correction ledger.
double reconstruct_field(CellField& U, const EdgeField& b, const Mesh& mesh,
                         const Operators& ops, const ReconOperator& R);

}  // namespace esdg
