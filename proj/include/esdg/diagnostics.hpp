// Read-only monitors: quadrature entropy, divergence residuals, conserved
// totals, per-cell entropy balance, L2 errors, and the snapshot / CSV
// writers used by the batch driver.

#pragma once

#include <array>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "esdg/dg_core.hpp"
#include "esdg/grid.hpp"
#include "esdg/operators.hpp"

namespace esdg {

// (dx dy / 4) sum of w_i w_j * entropy density over all nodes
double total_entropy(const CellField& U, const Mesh& mesh,
                     const Operators& ops, double gamma);

// per-cell |div B| volume integral plus boundary normal-jump integral,
// summed over cells (interior interfaces therefore counted from both sides)
double divergence_norm(const CellField& U, const EdgeField& b,
                       const Mesh& mesh, const Operators& ops);

struct DivCheck {
  double max_pointwise_div = 0.0;    // nodal divergence residual
  double max_trace_mismatch = 0.0;   // cell trace vs interface polynomial
};
DivCheck check_divfree(const CellField& U, const EdgeField& b,
                       const Mesh& mesh, const Operators& ops);

// quadrature totals of the eight conserved fields
Vec8 conserved_totals(const CellField& U, const Mesh& mesh,
                      const Operators& ops);

// residual of the per-cell entropy balance: time derivative of the cell
// entropy quadrature plus the boundary entropy-flux sums built from the
// cached interface fluxes; zero (to round-off) for globally
// divergence-free fields
std::vector<double> entropy_balance_residual(const CellField& U,
                                             const EdgeField& b,
                                             const Mesh& mesh,
                                             const Operators& ops,
                                             double gamma);

// nodal-quadrature L2 errors of the eight conserved components against a
// pointwise reference
std::array<double, 8> l2_error(
    const CellField& U, const Mesh& mesh, const Operators& ops,
    const std::function<Vec8(double, double)>& exact);

double min_pressure(const CellField& U, const Mesh& mesh,
                    const Operators& ops, double gamma);

// --- output helpers (17 significant digits, '\n' endings) ---------------

std::string format_g17(double v);

extern const char* kDiagnosticsHeader;

struct DiagnosticsRow {
  int step = 0;
  double time = 0, dt = 0, total_entropy = 0, div_norm = 0;
  double drift_rho = 0, drift_mom = 0, drift_energy = 0, drift_B = 0;
  double theta_min = 1, p_min = 0, energy_correction_cum = 0;
};
void write_diagnostics_row(std::ostream& os, const DiagnosticsRow& row);

// legacy-ASCII structured-grid snapshot on the global node cloud: the eight
// conserved fields plus pressure and |B|
void write_vtk_snapshot(const std::string& path, const CellField& U,
                        const Mesh& mesh, const Operators& ops, double gamma);
void write_csv_snapshot(const std::string& path, const CellField& U,
                        const Mesh& mesh, const Operators& ops, double gamma);

}  // namespace esdg
