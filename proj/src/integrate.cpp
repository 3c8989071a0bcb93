#include "esdg/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace esdg {

Stepper::Stepper(const Mesh& mesh, int k, const RunParams& par)
    : mesh_(mesh),
      par_(par),
      ops_(build_operators(k)),
      recon_(build_recon(ops_, mesh.dy() / mesh.dx())) {
  rhs_u_ = CellField::zeros(mesh.nx, mesh.ny, ops_.n);
  rhs_b_ = EdgeField::zeros(mesh_, k + 1);
}

double Stepper::compute_dt(const SimState& s) const {
  const int n = ops_.n;
  double ax = 0.0, ay = 0.0;
  for (int cj = 0; cj < mesh_.ny; ++cj)
    for (int ci = 0; ci < mesh_.nx; ++ci)
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1) {
          const Vec8 u = s.U.node(ci, cj, i1, j1);
          const double ux = u[MX] / u[RHO];
          const double uy = u[MY] / u[RHO];
          ax = std::max(ax, std::abs(ux) + fast_speed(u, par_.gamma, Dir::X));
          ay = std::max(ay, std::abs(uy) + fast_speed(u, par_.gamma, Dir::Y));
        }
  const double denom = ax / mesh_.dx() + ay / mesh_.dy();
  if (!(denom > 0.0) || !std::isfinite(denom))
    throw std::runtime_error("nonfinite signal speeds in time-step estimate");
  return par_.cfl / denom;
}

void Stepper::euler_stage(SimState& s, double dt) {
  const FluxCache fc = compute_fluxes(s.U, mesh_, ops_, par_.gamma);
  cell_rhs(s.U, fc, mesh_, ops_, par_.gamma, rhs_u_);
  edge_rhs(fc, mesh_, ops_, rhs_b_);
  s.U.axpy(dt, rhs_u_);
  s.b.axpy(dt, rhs_b_);

  if (par_.limiter.enabled && ops_.k > 0) {
    const std::vector<double> theta =
        jump_indicator(s.U, mesh_, ops_, par_.gamma, par_.limiter, dt);
    for (double t : theta) theta_min_ = std::min(theta_min_, t);
    scale_cell(s.U, theta, ops_);
    scale_edges(s.b, theta, mesh_);
  }

  s.ecorr_cum += reconstruct_field(s.U, s.b, mesh_, ops_, recon_);
}

namespace {
// r = ca*r + cb*q over the full state triple
void combine_state(SimState& r, double ca, double cb, const SimState& q) {
  r.U.combine(ca, r.U, cb, q.U);
  r.b.combine(ca, r.b, cb, q.b);
  r.ecorr_cum = ca * r.ecorr_cum + cb * q.ecorr_cum;
}
}  // namespace

void Stepper::step(SimState& s, double dt) {
  theta_min_ = 1.0;
  const double t0 = s.t;
  const double h = dt / 6.0;

  SimState q2 = s;  // second register
  for (int i = 0; i < 5; ++i) euler_stage(s, h);
  combine_state(q2, 1.0 / 25.0, 9.0 / 25.0, s);
  combine_state(s, -5.0, 15.0, q2);
  for (int i = 0; i < 4; ++i) euler_stage(s, h);
  euler_stage(s, h);
  combine_state(s, 3.0 / 5.0, 1.0, q2);

  s.t = t0 + dt;
}

void run(Stepper& st, SimState& s, double t_end,
         const std::function<void(int, const SimState&, double)>& callback) {
  if (callback) callback(0, s, 0.0);
  int step = 0;
  while (s.t < t_end - 1e-14 * std::max(1.0, t_end)) {
    double dt = st.compute_dt(s);
    if (s.t + dt > t_end) dt = t_end - s.t;
    st.step(s, dt);
    ++step;
    if (callback) callback(step, s, dt);
  }
}

}  // namespace esdg
