#include "esdg/dg_core.hpp"

namespace esdg {

FluxCache compute_fluxes(const CellField& U, const Mesh& mesh,
                         const Operators& ops, double gamma) {
  const int n = ops.n;
  FluxCache fc;
  fc.n = n;
  fc.nx = mesh.nx;
  fc.ny = mesh.ny;
  fc.cols = mesh.edge_cols();
  fc.rows = mesh.edge_rows();
  fc.vcols = mesh.vertex_cols();
  fc.vrows = mesh.vertex_rows();
  fc.fx.resize(static_cast<size_t>(fc.cols) * mesh.ny * n * 8);
  fc.fy.resize(static_cast<size_t>(mesh.nx) * fc.rows * n * 8);
  fc.ez.resize(static_cast<size_t>(fc.vcols) * fc.vrows);

  // vertical interfaces: left trace is node i1=n-1 of cell ie-1, right
  // trace node i1=0 of cell ie; ghosts resolved by cell_node_bc
  for (int j = 0; j < mesh.ny; ++j)
    for (int ie = 0; ie < fc.cols; ++ie)
      for (int q = 0; q < n; ++q) {
        const Vec8 ul = cell_node_bc(U, mesh, ops, gamma, ie - 1, j, n - 1, q);
        const Vec8 ur = cell_node_bc(U, mesh, ops, gamma, ie, j, 0, q);
        const Vec8 f = hll_flux(ul, ur, gamma, Dir::X);
        double* dst =
            fc.fx.data() + ((static_cast<size_t>(j) * fc.cols + ie) * n + q) * 8;
        for (int c = 0; c < 8; ++c) dst[c] = f[c];
      }

  for (int je = 0; je < fc.rows; ++je)
    for (int i = 0; i < mesh.nx; ++i)
      for (int q = 0; q < n; ++q) {
        const Vec8 ud = cell_node_bc(U, mesh, ops, gamma, i, je - 1, q, n - 1);
        const Vec8 uu = cell_node_bc(U, mesh, ops, gamma, i, je, q, 0);
        const Vec8 f = hll_flux(ud, uu, gamma, Dir::Y);
        double* dst =
            fc.fy.data() + ((static_cast<size_t>(je) * mesh.nx + i) * n + q) * 8;
        for (int c = 0; c < 8; ++c) dst[c] = f[c];
      }

  for (int jv = 0; jv < fc.vrows; ++jv)
    for (int iv = 0; iv < fc.vcols; ++iv) {
      const Vec8 uld =
          cell_node_bc(U, mesh, ops, gamma, iv - 1, jv - 1, n - 1, n - 1);
      const Vec8 urd = cell_node_bc(U, mesh, ops, gamma, iv, jv - 1, 0, n - 1);
      const Vec8 ulu = cell_node_bc(U, mesh, ops, gamma, iv - 1, jv, n - 1, 0);
      const Vec8 uru = cell_node_bc(U, mesh, ops, gamma, iv, jv, 0, 0);
      fc.ez[static_cast<size_t>(jv) * fc.vcols + iv] =
          vertex_ez(uld, urd, ulu, uru, gamma);
    }
  return fc;
}

void cell_rhs(const CellField& U, const FluxCache& fc, const Mesh& mesh,
              const Operators& ops, double gamma, CellField& rhs) {
  const int n = ops.n;
  const double sx = 2.0 / mesh.dx();
  const double sy = 2.0 / mesh.dy();
  std::vector<Vec8> line(n);
  std::vector<Vec8> pair(n * n);  // symmetric two-point flux table

  std::fill(rhs.a.begin(), rhs.a.end(), 0.0);
  for (int cj = 0; cj < mesh.ny; ++cj)
    for (int ci = 0; ci < mesh.nx; ++ci) {
      // x-direction: one line per j1
      for (int j1 = 0; j1 < n; ++j1) {
        for (int i1 = 0; i1 < n; ++i1) line[i1] = U.node(ci, cj, i1, j1);
        for (int a = 0; a < n; ++a)
          for (int b = a; b < n; ++b)
            pair[a * n + b] = ec_flux(line[a], line[b], gamma, Dir::X);
        for (int i1 = 0; i1 < n; ++i1) {
          Vec8 acc{};
          for (int l = 0; l < n; ++l) {
            const Vec8& fs = (i1 <= l) ? pair[i1 * n + l] : pair[l * n + i1];
            const double d = ops.D(i1, l);
            for (int c = 0; c < 8; ++c) acc[c] += d * fs[c];
          }
          double* r = rhs.node_ptr(ci, cj, i1, j1);
          for (int c = 0; c < 8; ++c) r[c] -= 2.0 * sx * acc[c];
        }
        // boundary penalty: replace the nodal flux by the interface flux
        {
          const Vec8 fpt = physical_flux(line[0], gamma, Dir::X);
          const double* fs = fc.fx_at(mesh, ci, cj, j1);
          const double c0 = sx * ops.tau(0) / ops.weights(0);
          double* r = rhs.node_ptr(ci, cj, 0, j1);
          for (int c = 0; c < 8; ++c) r[c] += c0 * (fpt[c] - fs[c]);
        }
        {
          const Vec8 fpt = physical_flux(line[n - 1], gamma, Dir::X);
          const double* fs = fc.fx_at(mesh, ci + 1, cj, j1);
          const double c1 = sx * ops.tau(n - 1) / ops.weights(n - 1);
          double* r = rhs.node_ptr(ci, cj, n - 1, j1);
          for (int c = 0; c < 8; ++c) r[c] += c1 * (fpt[c] - fs[c]);
        }
      }
      // y-direction: one line per i1
      for (int i1 = 0; i1 < n; ++i1) {
        for (int j1 = 0; j1 < n; ++j1) line[j1] = U.node(ci, cj, i1, j1);
        for (int a = 0; a < n; ++a)
          for (int b = a; b < n; ++b)
            pair[a * n + b] = ec_flux(line[a], line[b], gamma, Dir::Y);
        for (int j1 = 0; j1 < n; ++j1) {
          Vec8 acc{};
          for (int l = 0; l < n; ++l) {
            const Vec8& fs = (j1 <= l) ? pair[j1 * n + l] : pair[l * n + j1];
            const double d = ops.D(j1, l);
            for (int c = 0; c < 8; ++c) acc[c] += d * fs[c];
          }
          double* r = rhs.node_ptr(ci, cj, i1, j1);
          for (int c = 0; c < 8; ++c) r[c] -= 2.0 * sy * acc[c];
        }
        {
          const Vec8 fpt = physical_flux(line[0], gamma, Dir::Y);
          const double* fs = fc.fy_at(mesh, ci, cj, i1);
          const double c0 = sy * ops.tau(0) / ops.weights(0);
          double* r = rhs.node_ptr(ci, cj, i1, 0);
          for (int c = 0; c < 8; ++c) r[c] += c0 * (fpt[c] - fs[c]);
        }
        {
          const Vec8 fpt = physical_flux(line[n - 1], gamma, Dir::Y);
          const double* fs = fc.fy_at(mesh, ci, cj + 1, i1);
          const double c1 = sy * ops.tau(n - 1) / ops.weights(n - 1);
          double* r = rhs.node_ptr(ci, cj, i1, n - 1);
          for (int c = 0; c < 8; ++c) r[c] += c1 * (fpt[c] - fs[c]);
        }
      }
    }
}

}  // namespace esdg
