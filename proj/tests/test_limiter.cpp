// Oscillation damping: indicator behavior, cell-average preservation,
// entropy monotonicity of the scaling and survival of the interface
// compatibility constraint.

#include <cmath>
#include <random>

#include "doctest.h"
#include "esdg/limiter.hpp"
#include "esdg/reconstruct.hpp"

using namespace esdg;

namespace {

const double kGamma = 5.0 / 3.0;

CellField uniform_field(const Mesh& m, const Operators& ops, const Prim& w) {
  CellField U = CellField::zeros(m.nx, m.ny, ops.n);
  const Vec8 u0 = prim_to_cons(w, kGamma);
  for (int cj = 0; cj < m.ny; ++cj)
    for (int ci = 0; ci < m.nx; ++ci)
      for (int j1 = 0; j1 < ops.n; ++j1)
        for (int i1 = 0; i1 < ops.n; ++i1) U.set_node(ci, cj, i1, j1, u0);
  return U;
}

Prim base_prim() {
  Prim w;
  w.rho = 1.0;
  w.ux = 0.3;
  w.uy = -0.1;
  w.uz = 0.0;
  w.p = 1.0;
  w.Bx = 0.5;
  w.By = 0.2;
  w.Bz = 0.0;
  return w;
}

Vec8 cell_mean(const CellField& U, const Operators& ops, int ci, int cj) {
  Vec8 mean{};
  for (int j1 = 0; j1 < ops.n; ++j1)
    for (int i1 = 0; i1 < ops.n; ++i1) {
      const double wq = 0.25 * ops.weights(i1) * ops.weights(j1);
      const Vec8 u = U.node(ci, cj, i1, j1);
      for (int c = 0; c < 8; ++c) mean[c] += wq * u[c];
    }
  return mean;
}

double cell_entropy(const CellField& U, const Operators& ops, int ci,
                    int cj) {
  double s = 0.0;
  for (int j1 = 0; j1 < ops.n; ++j1)
    for (int i1 = 0; i1 < ops.n; ++i1)
      s += 0.25 * ops.weights(i1) * ops.weights(j1) *
           entropy_density(U.node(ci, cj, i1, j1), kGamma);
  return s;
}

}  // namespace

TEST_CASE("indicator is inert when disabled or at lowest order") {
  Mesh m;
  m.nx = 3;
  m.ny = 3;
  const Operators ops2 = build_operators(2);
  CellField U = uniform_field(m, ops2, base_prim());
  LimiterParams off;
  off.enabled = false;
  for (double th : jump_indicator(U, m, ops2, kGamma, off, 0.1))
    CHECK(th == 1.0);
  const Operators ops0 = build_operators(0);
  CellField U0 = uniform_field(m, ops0, base_prim());
  LimiterParams on;
  on.enabled = true;
  for (double th : jump_indicator(U0, m, ops0, kGamma, on, 0.1))
    CHECK(th == 1.0);
}

TEST_CASE("uniform data is untouched, derivative jumps are damped") {
  Mesh m;
  m.nx = 4;
  m.ny = 4;
  const Operators ops = build_operators(2);
  CellField U = uniform_field(m, ops, base_prim());
  LimiterParams par;
  par.enabled = true;
  const double dt = 0.05;
  for (double th : jump_indicator(U, m, ops, kGamma, par, dt))
    CHECK(th == 1.0);
  // drop a steep ramp into one cell; the indicator listens to interface
  // jumps of the derivatives (the value term carries weight zero), and the
  // ramp kinks every derivative at the cell boundary
  for (int j1 = 0; j1 < ops.n; ++j1)
    for (int i1 = 0; i1 < ops.n; ++i1) {
      Prim w = base_prim();
      w.rho = 3.0 + 2.0 * ops.nodes(i1);
      w.p = 6.0 + 4.0 * ops.nodes(j1);
      U.set_node(1, 1, i1, j1, prim_to_cons(w, kGamma));
    }
  const auto theta = jump_indicator(U, m, ops, kGamma, par, dt);
  CHECK(theta[1 * m.nx + 1] < 1.0);
  CHECK(theta[1 * m.nx + 2] < 1.0);  // neighbor sees the same jump
  // far-away cells see no jump at all
  CHECK(theta[3 * m.nx + 3] == 1.0);
  // stronger damping for longer stages
  const auto theta2 = jump_indicator(U, m, ops, kGamma, par, 2 * dt);
  CHECK(theta2[1 * m.nx + 1] < theta[1 * m.nx + 1]);
  // and for a larger strength constant
  LimiterParams hot = par;
  hot.c0 = 4.0;
  const auto theta3 = jump_indicator(U, m, ops, kGamma, hot, dt);
  CHECK(theta3[1 * m.nx + 1] < theta[1 * m.nx + 1]);
}

TEST_CASE("cell scaling preserves averages and admissible entropy") {
  Mesh m;
  m.nx = 5;
  m.ny = 4;
  const Operators ops = build_operators(2);
  CellField U = CellField::zeros(m.nx, m.ny, ops.n);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  for (int cj = 0; cj < m.ny; ++cj)
    for (int ci = 0; ci < m.nx; ++ci)
      for (int j1 = 0; j1 < ops.n; ++j1)
        for (int i1 = 0; i1 < ops.n; ++i1) {
          Prim w = base_prim();
          w.rho += jitter(rng);
          w.p += jitter(rng);
          w.ux += jitter(rng);
          w.By += jitter(rng);
          U.set_node(ci, cj, i1, j1, prim_to_cons(w, kGamma));
        }
  const double choices[4] = {0.0, 0.3, 0.7, 1.0};
  std::vector<double> theta(m.nx * m.ny);
  std::uniform_int_distribution<int> pick(0, 3);
  for (auto& t : theta) t = choices[pick(rng)];
  theta[0] = 1.0;  // keep one cell bitwise identical

  std::vector<Vec8> means_before(m.nx * m.ny);
  std::vector<double> ent_before(m.nx * m.ny);
  for (int cj = 0; cj < m.ny; ++cj)
    for (int ci = 0; ci < m.nx; ++ci) {
      means_before[cj * m.nx + ci] = cell_mean(U, ops, ci, cj);
      ent_before[cj * m.nx + ci] = cell_entropy(U, ops, ci, cj);
    }
  const CellField copy = U;
  scale_cell(U, theta, ops);
  for (int cj = 0; cj < m.ny; ++cj)
    for (int ci = 0; ci < m.nx; ++ci) {
      const Vec8 after = cell_mean(U, ops, ci, cj);
      const Vec8& before = means_before[cj * m.nx + ci];
      for (int c = 0; c < 8; ++c)
        CHECK(std::abs(after[c] - before[c]) < 1e-14);
      // convexity: the mathematical entropy cannot increase
      CHECK(cell_entropy(U, ops, ci, cj) <=
            ent_before[cj * m.nx + ci] + 1e-13);
    }
  // theta = 1 leaves the cell untouched
  for (int j1 = 0; j1 < ops.n; ++j1)
    for (int i1 = 0; i1 < ops.n; ++i1) {
      const Vec8 a = U.node(0, 0, i1, j1);
      const Vec8 b = copy.node(0, 0, i1, j1);
      for (int c = 0; c < 8; ++c) CHECK(a[c] == b[c]);
    }
  // theta = 0 collapses the cell onto its average
  for (int cj = 0; cj < m.ny; ++cj)
    for (int ci = 0; ci < m.nx; ++ci) {
      if (theta[cj * m.nx + ci] != 0.0) continue;
      const Vec8 mean = means_before[cj * m.nx + ci];
      for (int j1 = 0; j1 < ops.n; ++j1)
        for (int i1 = 0; i1 < ops.n; ++i1) {
          const Vec8 u = U.node(ci, cj, i1, j1);
          for (int c = 0; c < 8; ++c)
            CHECK(std::abs(u[c] - mean[c]) < 1e-14);
        }
    }
}

TEST_CASE("edge scaling keeps the interface data compatible") {
  Mesh m;
  m.nx = 4;
  m.ny = 3;
  m.x0 = 0.0;
  m.x1 = 1.0;
  m.y0 = 0.0;
  m.y1 = 0.6;
  const int k = 2;
  const Operators ops = build_operators(k);
  const ReconOperator R = build_recon(ops, m.dy() / m.dx());
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  // exact zero-net-flux means from a corner potential, arbitrary moments
  std::vector<double> pot((m.nx + 1) * (m.ny + 1));
  for (auto& v : pot) v = dist(rng);
  auto potv = [&](int iv, int jv) {
    auto [i, j] = m.vertex(iv, jv);
    return pot[j * (m.nx + 1) + i];
  };
  EdgeField b = EdgeField::zeros(m, k + 1);
  for (int j = 0; j < m.ny; ++j)
    for (int ie = 0; ie < m.edge_cols(); ++ie) {
      double* c = b.bx_at(m, ie, j);
      c[0] = (potv(ie, j + 1) - potv(ie, j)) / m.dy();
      for (int mm = 1; mm <= k; ++mm) c[mm] = dist(rng);
    }
  for (int je = 0; je < m.edge_rows(); ++je)
    for (int i = 0; i < m.nx; ++i) {
      double* c = b.by_at(m, i, je);
      c[0] = -(potv(i + 1, je) - potv(i, je)) / m.dx();
      for (int mm = 1; mm <= k; ++mm) c[mm] = dist(rng);
    }

  auto cell_e = [&](int ci, int cj) {
    Eigen::VectorXd e(4 * (k + 1));
    for (int mm = 0; mm <= k; ++mm) {
      e[mm] = b.bx_at(m, ci + 1, cj)[mm];
      e[(k + 1) + mm] = b.bx_at(m, ci, cj)[mm];
      e[2 * (k + 1) + mm] = b.by_at(m, ci, cj + 1)[mm];
      e[3 * (k + 1) + mm] = b.by_at(m, ci, cj)[mm];
    }
    return e;
  };
  auto worst_violation = [&] {
    double worst = 0.0;
    for (int cj = 0; cj < m.ny; ++cj)
      for (int ci = 0; ci < m.nx; ++ci) {
        const Eigen::VectorXd v = R.feas * cell_e(ci, cj);
        worst = std::max(worst, v.cwiseAbs().maxCoeff());
      }
    return worst;
  };
  CHECK(worst_violation() < 1e-12);

  const double choices[4] = {0.0, 0.3, 0.7, 1.0};
  std::vector<double> theta(m.nx * m.ny);
  std::uniform_int_distribution<int> pick(0, 3);
  for (auto& t : theta) t = choices[pick(rng)];
  EdgeField before = b;
  scale_edges(b, theta, m);
  // means never move; violations stay at round-off
  for (int j = 0; j < m.ny; ++j)
    for (int ie = 0; ie < m.edge_cols(); ++ie)
      CHECK(b.bx_at(m, ie, j)[0] == before.bx_at(m, ie, j)[0]);
  for (int je = 0; je < m.edge_rows(); ++je)
    for (int i = 0; i < m.nx; ++i)
      CHECK(b.by_at(m, i, je)[0] == before.by_at(m, i, je)[0]);
  CHECK(worst_violation() < 1e-12);
  // a zero factor wipes the moments of every edge touching that cell
  for (int cj = 0; cj < m.ny; ++cj)
    for (int ci = 0; ci < m.nx; ++ci) {
      if (theta[cj * m.nx + ci] != 0.0) continue;
      for (int mm = 1; mm <= k; ++mm) {
        CHECK(b.bx_at(m, ci, cj)[mm] == 0.0);
        CHECK(b.bx_at(m, ci + 1, cj)[mm] == 0.0);
        CHECK(b.by_at(m, ci, cj)[mm] == 0.0);
        CHECK(b.by_at(m, ci, cj + 1)[mm] == 0.0);
      }
    }
}
