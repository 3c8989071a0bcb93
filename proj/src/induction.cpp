#include "esdg/induction.hpp"

namespace esdg {

void edge_rhs(const FluxCache& fc, const Mesh& mesh, const Operators& ops,
              EdgeField& rhs) {
  const int n = ops.n;
  const int nm = rhs.nm;

  // vertical edges carry bx(y): d(bx)/dt = -dEz/dy weakly, with the edge
  // electric field Ez = -(By component of the x-interface flux)
  for (int j = 0; j < mesh.ny; ++j)
    for (int ie = 0; ie < rhs.cols; ++ie) {
      const double ez_bot = fc.ez_at(mesh, ie, j);
      const double ez_top = fc.ez_at(mesh, ie, j + 1);
      double* out = rhs.bx.data() + (static_cast<size_t>(j) * rhs.cols + ie) * nm;
      for (int m = 0; m < nm; ++m) {
        double quad = 0.0;
        for (int q = 0; q < n; ++q) {
          const double ez = -fc.fx_at(mesh, ie, j, q)[BY];
          quad += ops.weights(q) * ez * ops.Vd(q, m);
        }
        const double pm_bot = (m % 2 == 0) ? 1.0 : -1.0;  // P_m(-1)
        out[m] = (2.0 * m + 1.0) / mesh.dy() *
                 (quad - ez_top + pm_bot * ez_bot);
      }
    }

  // horizontal edges carry by(x): d(by)/dt = +dEz/dx weakly, with
  // Ez = +(Bx component of the y-interface flux)
  for (int je = 0; je < rhs.rows; ++je)
    for (int i = 0; i < mesh.nx; ++i) {
      const double ez_left = fc.ez_at(mesh, i, je);
      const double ez_right = fc.ez_at(mesh, i + 1, je);
      double* out = rhs.by.data() + (static_cast<size_t>(je) * mesh.nx + i) * nm;
      for (int m = 0; m < nm; ++m) {
        double quad = 0.0;
        for (int q = 0; q < n; ++q) {
          const double ez = fc.fy_at(mesh, i, je, q)[BX];
          quad += ops.weights(q) * ez * ops.Vd(q, m);
        }
        const double pm_left = (m % 2 == 0) ? 1.0 : -1.0;
        out[m] = (2.0 * m + 1.0) / mesh.dx() *
                 (-quad + ez_right - pm_left * ez_left);
      }
    }
}

}  // namespace esdg
