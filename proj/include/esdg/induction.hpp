// Galerkin update of the interface normal-field polynomials from the cached
// electric fields: interface quadrature uses the 1D HLL fluxes already
// computed for the cell update, endpoint coupling uses the vertex solver.
// Because every vertex value is stored once and shared by the four touching
// interfaces, the cell-average flux constraint telescopes exactly.

#pragma once

#include "esdg/dg_core.hpp"
#include "esdg/grid.hpp"

namespace esdg {

// Fills rhs (same shape as the edge field) with d(b)/dt.
void edge_rhs(const FluxCache& fc, const Mesh& mesh, const Operators& ops,
              EdgeField& rhs);

}  // namespace esdg
