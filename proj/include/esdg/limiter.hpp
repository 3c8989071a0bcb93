// Oscillation damping: a per-cell scaling factor derived from the jump
// intensity of the solution and its derivatives at cell boundaries, applied
// to the nodal states about their cell average and to the high-order
// moments of the interface polynomials (means untouched, so the reconstruction
// compatibility constraint survives limiting).

#pragma once

#include <vector>

#include "esdg/grid.hpp"
#include "esdg/operators.hpp"

namespace esdg {

struct LimiterParams {
  bool enabled = false;
  double c0 = 1.0;
};

// Per-cell damping factor theta in (0,1]; all ones when disabled or k=0
// (the strength normalisation 1/(4k(k+1)) is undefined for k=0).
std::vector<double> jump_indicator(const CellField& U, const Mesh& mesh,
                                   const Operators& ops, double gamma,
                                   const LimiterParams& params, double dt);

// U <- Ubar + theta (U - Ubar) nodewise; preserves the cell average and
// does not increase the quadrature entropy of the cell.
void scale_cell(CellField& U, const std::vector<double>& theta,
                const Operators& ops);

// Scales the l>=1 Legendre coefficients of every interface polynomial by
// min(theta_left, theta_right) over the adjacent cells (absent neighbors
// count as 1); edge means are untouched.
void scale_edges(EdgeField& b, const std::vector<double>& theta,
                 const Mesh& mesh);

}  // namespace esdg
