// Shared interface/vertex flux evaluation and the nodal DG right-hand side
// for the conserved variables.
//
// Every interface flux and every vertex electric field is computed exactly
// once per stage and shared by all users (cell update, edge update,
// entropy diagnostics); this single-valuedness is what makes the global
// conservation sums and the cell-average magnetic constraint telescope to
// round-off.

#pragma once

#include <vector>

#include "esdg/flux.hpp"
#include "esdg/grid.hpp"

namespace esdg {

struct FluxCache {
  int n = 0;
  int nx = 0, ny = 0;
  int cols = 0, rows = 0;    // stored vertical / horizontal interfaces
  int vcols = 0, vrows = 0;  // stored vertices
  std::vector<double> fx;  // HLL flux at vertical-interface nodes, 8 comps
  std::vector<double> fy;  // HLL flux at horizontal-interface nodes
  std::vector<double> ez;  // vertex electric field

  const double* fx_at(const Mesh& mesh, int ie, int j, int q) const {
    auto [i, jj] = mesh.vedge(ie, j);
    return fx.data() + ((static_cast<size_t>(jj) * cols + i) * n + q) * 8;
  }
  const double* fy_at(const Mesh& mesh, int i, int je, int q) const {
    auto [ii, jj] = mesh.hedge(i, je);
    return fy.data() + ((static_cast<size_t>(jj) * nx + ii) * n + q) * 8;
  }
  double ez_at(const Mesh& mesh, int iv, int jv) const {
    auto [i, j] = mesh.vertex(iv, jv);
    return ez[static_cast<size_t>(j) * vcols + i];
  }
};

// Evaluates the HLL flux at the k+2 nodes of every interface and the 2D HLL
// electric field at every vertex, resolving boundary ghosts per mesh.bc.
FluxCache compute_fluxes(const CellField& U, const Mesh& mesh,
                         const Operators& ops, double gamma);

// Fills rhs with the semi-discrete nodal update: entropy-conservative
// two-point volume terms plus the boundary penalty that swaps the nodal
// physical flux for the cached interface flux.
void cell_rhs(const CellField& U, const FluxCache& fc, const Mesh& mesh,
              const Operators& ops, double gamma, CellField& rhs);

}  // namespace esdg
