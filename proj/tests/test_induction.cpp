// Interface magnetic-field updates: consistency for constant data, the
// lowest-mode circulation form and the per-cell net-flux telescoping that
// keeps the interface data compatible.

#include <cmath>

#include "doctest.h"
#include "esdg/dg_core.hpp"
#include "esdg/induction.hpp"

using namespace esdg;

namespace {

const double kGamma = 5.0 / 3.0;

CellField smooth_field(const Mesh& m, const Operators& ops) {
  CellField U = CellField::zeros(m.nx, m.ny, ops.n);
  for (int cj = 0; cj < m.ny; ++cj)
    for (int ci = 0; ci < m.nx; ++ci)
      for (int j1 = 0; j1 < ops.n; ++j1)
        for (int i1 = 0; i1 < ops.n; ++i1) {
          const double x = m.node_x(ops, ci, i1);
          const double y = m.node_y(ops, cj, j1);
          Prim w;
          w.rho = 1.5 + 0.2 * std::sin(2 * M_PI * (x + y));
          w.ux = 0.6 + 0.3 * std::cos(2 * M_PI * y);
          w.uy = -0.2 + 0.25 * std::sin(2 * M_PI * x);
          w.uz = 0.0;
          w.p = 1.8 + 0.4 * std::cos(2 * M_PI * x);
          w.Bx = 0.5 * std::cos(2 * M_PI * y);
          w.By = 0.45 * std::sin(2 * M_PI * x);
          w.Bz = 0.1;
          U.set_node(ci, cj, i1, j1, prim_to_cons(w, kGamma));
        }
  return U;
}

}  // namespace

TEST_CASE("constant data leaves the interface field unchanged") {
  Mesh m;
  m.nx = 3;
  m.ny = 2;
  const Operators ops = build_operators(2);
  Prim w;
  w.rho = 1.0;
  w.ux = 0.8;
  w.uy = -0.5;
  w.uz = 0.1;
  w.p = 1.5;
  w.Bx = 0.7;
  w.By = 0.2;
  w.Bz = -0.1;
  const Vec8 u0 = prim_to_cons(w, kGamma);
  CellField U = CellField::zeros(m.nx, m.ny, ops.n);
  for (int cj = 0; cj < m.ny; ++cj)
    for (int ci = 0; ci < m.nx; ++ci)
      for (int j1 = 0; j1 < ops.n; ++j1)
        for (int i1 = 0; i1 < ops.n; ++i1) U.set_node(ci, cj, i1, j1, u0);
  const FluxCache fc = compute_fluxes(U, m, ops, kGamma);
  EdgeField rhs = EdgeField::zeros(m, ops.k + 1);
  edge_rhs(fc, m, ops, rhs);
  double worst = 0.0;
  for (double v : rhs.bx) worst = std::max(worst, std::abs(v));
  for (double v : rhs.by) worst = std::max(worst, std::abs(v));
  CHECK(worst < 1e-12);
}

TEST_CASE("mean coefficients follow the corner circulation") {
  Mesh m;
  m.nx = 4;
  m.ny = 4;
  const Operators ops = build_operators(1);
  const CellField U = smooth_field(m, ops);
  const FluxCache fc = compute_fluxes(U, m, ops, kGamma);
  EdgeField rhs = EdgeField::zeros(m, ops.k + 1);
  edge_rhs(fc, m, ops, rhs);
  for (int j = 0; j < m.ny; ++j)
    for (int ie = 0; ie < m.edge_cols(); ++ie) {
      const double expect =
          (fc.ez_at(m, ie, j) - fc.ez_at(m, ie, j + 1)) / m.dy();
      CHECK(rhs.bx_at(m, ie, j)[0] ==
            doctest::Approx(expect).epsilon(1e-13).scale(1.0));
    }
  for (int je = 0; je < m.edge_rows(); ++je)
    for (int i = 0; i < m.nx; ++i) {
      const double expect =
          (fc.ez_at(m, i + 1, je) - fc.ez_at(m, i, je)) / m.dx();
      CHECK(rhs.by_at(m, i, je)[0] ==
            doctest::Approx(expect).epsilon(1e-13).scale(1.0));
    }
}

TEST_CASE("per-cell net flux of the update telescopes to zero") {
  for (int k : {1, 2}) {
    Mesh m;
    m.nx = 5;
    m.ny = 4;
    m.x0 = 0.0;
    m.x1 = 1.0;
    m.y0 = 0.0;
    m.y1 = 0.8;
    const Operators ops = build_operators(k);
    const CellField U = smooth_field(m, ops);
    const FluxCache fc = compute_fluxes(U, m, ops, kGamma);
    EdgeField rhs = EdgeField::zeros(m, ops.k + 1);
    edge_rhs(fc, m, ops, rhs);
    for (int cj = 0; cj < m.ny; ++cj)
      for (int ci = 0; ci < m.nx; ++ci) {
        const double net =
            m.dy() * (rhs.bx_at(m, ci + 1, cj)[0] - rhs.bx_at(m, ci, cj)[0]) +
            m.dx() * (rhs.by_at(m, ci, cj + 1)[0] - rhs.by_at(m, ci, cj)[0]);
        CHECK(std::abs(net) < 1e-12);
      }
  }
}

TEST_CASE("wall edges stay exactly frozen") {
  Mesh m;
  m.nx = 3;
  m.ny = 2;
  m.bc.y = BCType::Reflective;
  const Operators ops = build_operators(2);
  const CellField U = smooth_field(m, ops);
  const FluxCache fc = compute_fluxes(U, m, ops, kGamma);
  EdgeField rhs = EdgeField::zeros(m, ops.k + 1);
  edge_rhs(fc, m, ops, rhs);
  // the tangential electric field on a mirror wall vanishes identically,
  // so the normal field on wall edges never changes
  for (int je : {0, m.ny})
    for (int i = 0; i < m.nx; ++i)
      for (int mm = 0; mm <= ops.k; ++mm)
        CHECK(rhs.by_at(m, i, je)[mm] == 0.0);
}
