// Fully discrete stepping: forward-Euler stages composed of
//   1. nodal DG update of the conserved variables,
//   2. Galerkin update of the interface polynomials,
//   3. jump limiter on cells and interface moments,
//   4. divergence-free reconstruction plus pressure-preserving energy patch,
// combined by the 10-stage 4th-order SSP Runge-Kutta method (low-storage
// two-register form).  Every register is a convex/affine combination of
// stage outputs, so divergence-freeness, admissibility and the energy
// correction ledger all combine linearly.

#pragma once

#include <functional>

#include "esdg/dg_core.hpp"
#include "esdg/grid.hpp"
#include "esdg/induction.hpp"
#include "esdg/limiter.hpp"
#include "esdg/reconstruct.hpp"

namespace esdg {

struct RunParams {
  double gamma = 5.0 / 3.0;
  double cfl = 0.45;
  LimiterParams limiter;
};

struct SimState {
  CellField U;
  EdgeField b;
  double t = 0.0;
  // cumulative quadrature-weighted energy added by reconstruction; the
  // total-energy drift of a periodic run equals this to round-off
  double ecorr_cum = 0.0;
};

class Stepper {
 public:
  Stepper(const Mesh& mesh, int k, const RunParams& par);

  double compute_dt(const SimState& s) const;
  // full Euler stage (steps 1-4) in place with the given stage step size
  void euler_stage(SimState& s, double dt);
  // one SSPRK(10,4) step; advances s.t by dt
  void step(SimState& s, double dt);

  // smallest limiter factor seen during the most recent step()
  double theta_min() const { return theta_min_; }
  const Mesh& mesh() const { return mesh_; }
  const Operators& ops() const { return ops_; }
  const ReconOperator& recon() const { return recon_; }
  const RunParams& params() const { return par_; }

 private:
  Mesh mesh_;
  RunParams par_;
  Operators ops_;
  ReconOperator recon_;
  double theta_min_ = 1.0;
  CellField rhs_u_;
  EdgeField rhs_b_;
};

// Steps from s.t to t_end (final step clipped); invokes the callback after
// every step with (step index, state, dt used); step 0 is reported before
// stepping begins with dt = 0.
void run(Stepper& st, SimState& s, double t_end,
         const std::function<void(int, const SimState&, double)>& callback);

}  // namespace esdg
