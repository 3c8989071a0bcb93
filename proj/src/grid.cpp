#include "esdg/grid.hpp"

#include <stdexcept>

namespace esdg {

double EdgeField::eval(const double* coeff, double t) const {
  double v = 0.0;
  for (int m = 0; m < nm; ++m) v += coeff[m] * legendre(m, t);
  return v;
}

Vec8 cell_node_bc(const CellField& U, const Mesh& mesh, const Operators& ops,
                  double gamma, int ci, int cj, int i1, int j1) {
  const int nx = mesh.nx, ny = mesh.ny, n = U.n;

  // a shifted-periodic y-wrap relocates the sample in x, so it is resolved
  // first; whatever boundary handling still applies below must see the
  // mapped column, not the raw one
  if (mesh.bc.y == BCType::ShiftedPeriodic) {
    while (cj >= ny) {
      cj -= ny;
      ci += mesh.bc.shift;
    }
    while (cj < 0) {
      cj += ny;
      ci -= mesh.bc.shift;
    }
  }

  const bool xout = (ci < 0 || ci >= nx);
  const bool yout = (cj < 0 || cj >= ny);

  if ((xout && mesh.bc.x == BCType::Dirichlet) ||
      (yout && mesh.bc.y == BCType::Dirichlet)) {
    // the far-field profile is evaluated at the ghost position
    const double xp = mesh.node_x(ops, ci, i1);
    const double yp = mesh.node_y(ops, cj, j1);
    return prim_to_cons(mesh.bc.dirichlet(xp, yp), gamma);
  }

  double sx = 1.0, sy = 1.0;
  if (yout) {
    switch (mesh.bc.y) {
      case BCType::Periodic:
        cj = ((cj % ny) + ny) % ny;
        break;
      case BCType::Reflective:
        if (cj == ny) {
          cj = ny - 1;
        } else if (cj == -1) {
          cj = 0;
        } else {
          throw std::runtime_error("reflective ghost deeper than one cell");
        }
        j1 = n - 1 - j1;
        sy = -1.0;
        break;
      default:
        break;
    }
  }
  if (ci < 0 || ci >= nx) {
    switch (mesh.bc.x) {
      case BCType::Periodic:
      case BCType::ShiftedPeriodic:
        ci = ((ci % nx) + nx) % nx;
        break;
      case BCType::Reflective:
        if (ci == nx) {
          ci = nx - 1;
        } else if (ci == -1) {
          ci = 0;
        } else {
          throw std::runtime_error("reflective ghost deeper than one cell");
        }
        i1 = n - 1 - i1;
        sx = -1.0;
        break;
      default:
        break;
    }
  }

  Vec8 u = U.node(ci, cj, i1, j1);
  if (sx < 0.0) {
    u[MX] = -u[MX];
    u[BX] = -u[BX];
  }
  if (sy < 0.0) {
    u[MY] = -u[MY];
    u[BY] = -u[BY];
  }
  return u;
}

}  // namespace esdg
