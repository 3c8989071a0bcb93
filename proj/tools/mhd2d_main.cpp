// Batch driver: single simulations from a config file, convergence studies,
// the build-time property suite and reference-profile generation.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <vector>

#include "CLI11.hpp"
#include "esdg/config.hpp"
#include "esdg/diagnostics.hpp"
#include "esdg/problems.hpp"
#include "esdg/reconstruct.hpp"

namespace {

using namespace esdg;

int cmd_run(const std::string& config_path) {
  const Config cfg = load_config(config_path);
  ProblemSpec ps = get_problem(cfg.problem, cfg.nx);
  if (cfg.gamma) ps.gamma = *cfg.gamma;
  const double t_end = cfg.t_end.value_or(ps.rec_t_end);

  RunParams par;
  par.gamma = ps.gamma;
  par.cfl = cfg.cfl;
  par.limiter.enabled =
      cfg.limiter_enabled.value_or(ps.limiter_recommended);
  par.limiter.c0 = cfg.limiter_c0.value_or(ps.limiter_c0);
  if (par.limiter.enabled && cfg.k == 0) {
    std::cerr << "warning: limiter disabled for k=0 (moment scaling "
                 "undefined for piecewise constants)\n";
    par.limiter.enabled = false;
  }

  const Mesh mesh = make_mesh(ps, cfg.nx, cfg.ny);
  Stepper st(mesh, cfg.k, par);
  SimState s = initialize(ps, mesh, st.ops());

  std::filesystem::create_directories(cfg.output_dir);
  std::ofstream diag(cfg.output_dir + "/diagnostics.csv", std::ios::binary);
  if (!diag) {
    std::cerr << "error: cannot open diagnostics output\n";
    return 1;
  }
  diag << kDiagnosticsHeader << '\n';

  const Vec8 q0 = conserved_totals(s.U, mesh, st.ops());
  auto rel_drift = [](double q, double q0v) {
    const double d = std::abs(q - q0v);
    return std::abs(q0v) > 0 ? d / std::abs(q0v) : d;
  };

  auto snapshot = [&](int step) {
    char name[64];
    std::snprintf(name, sizeof(name), "/snapshot_%06d", step);
    write_vtk_snapshot(cfg.output_dir + name + std::string(".vtk"), s.U,
                       mesh, st.ops(), par.gamma);
    write_csv_snapshot(cfg.output_dir + name + std::string(".csv"), s.U,
                       mesh, st.ops(), par.gamma);
  };

  int last_written = -1;
  auto callback = [&](int step, const SimState& state, double dt) {
    const Vec8 q = conserved_totals(state.U, mesh, st.ops());
    DiagnosticsRow r;
    r.step = step;
    r.time = state.t;
    r.dt = dt;
    r.total_entropy = total_entropy(state.U, mesh, st.ops(), par.gamma);
    r.div_norm = divergence_norm(state.U, state.b, mesh, st.ops());
    r.drift_rho = rel_drift(q[RHO], q0[RHO]);
    const double m1 = std::abs(q[MX] - q0[MX]) + std::abs(q[MY] - q0[MY]) +
                      std::abs(q[MZ] - q0[MZ]);
    const double m0 = std::abs(q0[MX]) + std::abs(q0[MY]) + std::abs(q0[MZ]);
    r.drift_mom = m0 > 0 ? m1 / m0 : m1;
    r.drift_energy = rel_drift(q[EN], q0[EN]);
    const double b1 = std::abs(q[BX] - q0[BX]) + std::abs(q[BY] - q0[BY]) +
                      std::abs(q[BZ] - q0[BZ]);
    const double b0 = std::abs(q0[BX]) + std::abs(q0[BY]) + std::abs(q0[BZ]);
    r.drift_B = b0 > 0 ? b1 / b0 : b1;
    r.theta_min = (step == 0) ? 1.0 : st.theta_min();
    r.p_min = min_pressure(state.U, mesh, st.ops(), par.gamma);
    r.energy_correction_cum = state.ecorr_cum;
    write_diagnostics_row(diag, r);
    if (step % std::max(1, cfg.output_every_n_steps) == 0) {
      snapshot(step);
      last_written = step;
    }
  };

  int final_step = 0;
  run(st, s, t_end,
      [&](int step, const SimState& state, double dt) {
        final_step = step;
        callback(step, state, dt);
      });
  if (last_written != final_step) snapshot(final_step);
  std::cout << "completed " << final_step << " steps to t = "
            << format_g17(s.t) << '\n';
  return 0;
}

int cmd_converge(const std::string& problem, int k,
                 const std::vector<int>& meshes, double t_end,
                 const std::string& out_path) {
  ProblemSpec ps = get_problem(problem);
  if (!ps.exact) {
    std::cerr << "error: problem has no exact solution for convergence\n";
    return 1;
  }
  std::ostringstream table;
  table << "N,err_rho,ord_rho,err_mx,ord_mx,err_Bx,ord_Bx,err_E,ord_E\n";
  std::array<double, 8> prev{};
  bool have_prev = false;
  for (int N : meshes) {
    RunParams par;
    par.gamma = ps.gamma;
    const Mesh mesh = make_mesh(ps, N, N);
    Stepper st(mesh, k, par);
    SimState s = initialize(ps, mesh, st.ops());
    run(st, s, t_end, nullptr);
    const auto err = l2_error(s.U, mesh, st.ops(), [&](double x, double y) {
      return ps.exact(x, y, s.t);
    });
    table << N;
    for (int c : {RHO, MX, BX, EN}) {
      table << ',' << format_g17(err[c]) << ',';
      if (have_prev)
        table << format_g17(std::log2(prev[c] / err[c]));
      else
        table << '-';
    }
    table << '\n';
    prev = err;
    have_prev = true;
    std::cout << "mesh " << N << " done\n";
  }
  std::cout << table.str();
  if (!out_path.empty()) {
    std::ofstream os(out_path, std::ios::binary);
    os << table.str();
  }
  return 0;
}

// quick randomized property suite (a superset runs in the test binaries)
int cmd_verify(unsigned long seed) {
  int failures = 0;
  auto report = [&](const char* name, bool ok, double value) {
    std::cout << (ok ? "PASS" : "FAIL") << ' ' << name << " (" << value
              << ")\n";
    if (!ok) ++failures;
  };

  double worst = 0.0;
  for (int k = 0; k <= 4; ++k) {
    const Operators ops = build_operators(k);
    const Eigen::MatrixXd r = ops.S + ops.S.transpose() -
                              Eigen::MatrixXd(ops.tau.asDiagonal());
    worst = std::max(worst, r.cwiseAbs().maxCoeff());
    worst = std::max(worst, ops.D.rowwise().sum().cwiseAbs().maxCoeff());
  }
  report("sbp_identities", worst <= 1e-13, worst);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(0.1, 3.0), any(-2.0, 2.0);
  auto rand_prim = [&] {
    Prim w;
    w.rho = pos(rng);
    w.p = pos(rng);
    w.ux = any(rng);
    w.uy = any(rng);
    w.uz = any(rng);
    w.Bx = any(rng);
    w.By = any(rng);
    w.Bz = any(rng);
    return w;
  };
  auto rand_state = [&] { return prim_to_cons(rand_prim(), 5.0 / 3.0); };

  double worst_ec = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const Vec8 ul = rand_state(), ur = rand_state();
    for (Dir d : {Dir::X, Dir::Y}) {
      const double g = 5.0 / 3.0;
      const Vec8 f = ec_flux(ul, ur, g, d);
      const Vec8 vl = entropy_variables(ul, g), vr = entropy_variables(ur, g);
      const double psl = (d == Dir::X) ? psi_x(ul, g) : psi_y(ul, g);
      const double psr = (d == Dir::X) ? psi_x(ur, g) : psi_y(ur, g);
      const int comp = (d == Dir::X) ? BX : BY;
      const double bavg = 0.5 * (ul[comp] + ur[comp]);
      const double lhs = dot8(vr - vl, f);
      const double rhs =
          (psr - psl) -
          (phi_pot(ur, g) - phi_pot(ul, g)) * bavg;
      const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
      worst_ec = std::max(worst_ec, std::abs(lhs - rhs) / scale);
    }
  }
  report("ec_flux_identity", worst_ec <= 1e-11, worst_ec);

  double worst_es = 0.0;
  for (int it = 0; it < 1000; ++it) {
    for (Dir d : {Dir::X, Dir::Y}) {
      // interface traces share the edge polynomial for the normal field
      // component, so the dissipation bound is sampled on pairs with a
      // single normal value (the one-dimensional Riemann setting)
      const Prim pl = rand_prim();
      Prim pr = rand_prim();
      if (d == Dir::X) pr.Bx = pl.Bx;
      else pr.By = pl.By;
      const double g = 5.0 / 3.0;
      const Vec8 ul = prim_to_cons(pl, g), ur = prim_to_cons(pr, g);
      const Vec8 f = hll_flux(ul, ur, g, d);
      const Vec8 vl = entropy_variables(ul, g), vr = entropy_variables(ur, g);
      const double psl = (d == Dir::X) ? psi_x(ul, g) : psi_y(ul, g);
      const double psr = (d == Dir::X) ? psi_x(ur, g) : psi_y(ur, g);
      const int comp = (d == Dir::X) ? BX : BY;
      const double bavg = 0.5 * (ul[comp] + ur[comp]);
      const double lhs = dot8(vr - vl, f);
      const double rhs =
          (psr - psl) - (phi_pot(ur, g) - phi_pot(ul, g)) * bavg;
      // entropy stability: lhs - rhs <= 0 up to round-off
      worst_es = std::max(worst_es, lhs - rhs);
    }
  }
  report("es_inequality", worst_es <= 1e-12, worst_es);

  bool sizes_ok = true;
  int got = 0;
  for (int k : {1, 2, 3}) {
    const ReconOperator R = build_recon(build_operators(k), 1.0);
    const int expect = (k == 1) ? 35 : (k == 2 ? 60 : 91);
    got = static_cast<int>(R.G.rows());
    if (got != expect) sizes_ok = false;
  }
  const ReconOperator R1 = build_recon(build_operators(1), 1.0);
  const double g22 = R1.Ginv(1, 1);
  const bool golden_ok = std::abs(g22 - 9.0 / 16.0) <= 1e-3 * (9.0 / 16.0);
  report("recon_kkt_sizes", sizes_ok, got);
  report("recon_golden_entry", golden_ok, g22);

  if (failures == 0) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cerr << "error: " << failures << " verification check(s) failed\n";
  return 1;
}

int cmd_reference(const std::string& problem, int cells,
                  const std::string& out_path) {
  if (problem != "rotated_brio_wu") {
    std::cerr << "error: no reference profile for problem: " << problem
              << '\n';
    return 1;
  }
  const Reference1D ref = brio_wu_reference(cells);
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << out_path << '\n';
    return 1;
  }
  os << "x,rho,un,ut,uz,p,Bn,Bt,Bz\n";
  const double gamma = 5.0 / 3.0;
  for (size_t i = 0; i < ref.cells.size(); ++i) {
    const double x = ref.x0 + (i + 0.5) * ref.dx;
    const Prim w = cons_to_prim(ref.cells[i], gamma);
    os << format_g17(x) << ',' << format_g17(w.rho) << ','
       << format_g17(w.ux) << ',' << format_g17(w.uy) << ','
       << format_g17(w.uz) << ',' << format_g17(w.p) << ','
       << format_g17(w.Bx) << ',' << format_g17(w.By) << ','
       << format_g17(w.Bz) << '\n';
  }
  std::cout << "wrote " << ref.cells.size() << " cells to " << out_path
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D ideal-MHD nodal DG solver (entropy stable, "
               "divergence-free)"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "run one simulation");
  run_cmd->add_option("--config", config_path, "config file")->required();

  std::string cv_problem = "vortex";
  int cv_k = 2;
  std::vector<int> cv_meshes{32, 64};
  double cv_t_end = 0.5;
  std::string cv_out;
  auto* cv_cmd = app.add_subcommand("converge", "mesh-refinement study");
  cv_cmd->add_option("--problem", cv_problem, "problem id");
  cv_cmd->add_option("--k", cv_k, "polynomial degree");
  cv_cmd->add_option("--meshes", cv_meshes, "mesh sizes")->delimiter(',');
  cv_cmd->add_option("--t-end", cv_t_end, "final time");
  cv_cmd->add_option("--out", cv_out, "also write the table to this file");

  unsigned long vf_seed = 12345;
  auto* vf_cmd = app.add_subcommand("verify", "randomized property suite");
  vf_cmd->add_option("--seed", vf_seed, "random seed");

  std::string rf_problem = "rotated_brio_wu";
  int rf_cells = 10000;
  std::string rf_out = "reference.csv";
  auto* rf_cmd = app.add_subcommand("reference", "build reference profile");
  rf_cmd->add_option("--problem", rf_problem, "problem id");
  rf_cmd->add_option("--cells", rf_cells, "1D resolution");
  rf_cmd->add_option("--out", rf_out, "output CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return cmd_run(config_path);
    if (cv_cmd->parsed())
      return cmd_converge(cv_problem, cv_k, cv_meshes, cv_t_end, cv_out);
    if (vf_cmd->parsed()) return cmd_verify(vf_seed);
    if (rf_cmd->parsed()) return cmd_reference(rf_problem, rf_cells, rf_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
