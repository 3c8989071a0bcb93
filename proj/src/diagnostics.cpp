#include "esdg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "esdg/state.hpp"

namespace esdg {

namespace {

// compensated (Kahan) accumulator so global totals over ~1e5 nodes do not
// pick up summation-order noise comparable to the conservation drifts we
// want to measure
struct kahan_sum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

double nodal_div(const CellField& U, const Mesh& mesh, const Operators& ops,
                 int ci, int cj, int i1, int j1) {
  const int n = ops.n;
  double dbx = 0.0, dby = 0.0;
  for (int l = 0; l < n; ++l) {
    dbx += ops.D(i1, l) * U.node_ptr(ci, cj, l, j1)[BX];
    dby += ops.D(j1, l) * U.node_ptr(ci, cj, i1, l)[BY];
  }
  return 2.0 / mesh.dx() * dbx + 2.0 / mesh.dy() * dby;
}

}  // namespace

double total_entropy(const CellField& U, const Mesh& mesh,
                     const Operators& ops, double gamma) {
  const int n = ops.n;
  const double cw = 0.25 * mesh.dx() * mesh.dy();
  kahan_sum total;
  for (int cj = 0; cj < mesh.ny; ++cj)
    for (int ci = 0; ci < mesh.nx; ++ci)
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1)
          total.add(cw * ops.weights(i1) * ops.weights(j1) *
                    entropy_density(U.node(ci, cj, i1, j1), gamma));
  return total.s;
}

double divergence_norm(const CellField& U, const EdgeField& /*b*/,
                       const Mesh& mesh, const Operators& ops) {
  const int n = ops.n;
  const double cw = 0.25 * mesh.dx() * mesh.dy();
  double total = 0.0;
  for (int cj = 0; cj < mesh.ny; ++cj)
    for (int ci = 0; ci < mesh.nx; ++ci)
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1)
          total += cw * ops.weights(i1) * ops.weights(j1) *
                   std::abs(nodal_div(U, mesh, ops, ci, cj, i1, j1));

  // normal-trace jumps across interior (or wrap-identified) interfaces;
  // each interface lies on the boundary of two cells, hence the factor 2
  for (int j = 0; j < mesh.ny; ++j)
    for (int ie = (mesh.wrap_x() ? 0 : 1); ie < mesh.nx; ++ie) {
      const int cl = (ie == 0) ? mesh.nx - 1 : ie - 1;
      for (int q = 0; q < n; ++q) {
        const double jump = U.node_ptr(ie, j, 0, q)[BX] -
                            U.node_ptr(cl, j, n - 1, q)[BX];
        total += 2.0 * 0.5 * mesh.dy() * ops.weights(q) * std::abs(jump);
      }
    }
  for (int je = (mesh.wrap_y() ? 0 : 1); je < mesh.ny; ++je)
    for (int i = 0; i < mesh.nx; ++i) {
      const int cd_j = (je == 0) ? mesh.ny - 1 : je - 1;
      for (int q = 0; q < n; ++q) {
        const double jump = U.node_ptr(i, je, q, 0)[BY] -
                            U.node_ptr(i, cd_j, q, n - 1)[BY];
        total += 2.0 * 0.5 * mesh.dx() * ops.weights(q) * std::abs(jump);
      }
    }
  return total;
}

DivCheck check_divfree(const CellField& U, const EdgeField& b,
                       const Mesh& mesh, const Operators& ops) {
  const int n = ops.n;
  const int nm = b.nm;
  const Eigen::MatrixXd Ve = ops.V.leftCols(nm);
  DivCheck r;
  for (int cj = 0; cj < mesh.ny; ++cj)
    for (int ci = 0; ci < mesh.nx; ++ci) {
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1)
          r.max_pointwise_div =
              std::max(r.max_pointwise_div,
                       std::abs(nodal_div(U, mesh, ops, ci, cj, i1, j1)));
      // traces against the owning interface polynomials
      const double* er = b.bx_at(mesh, ci + 1, cj);
      const double* el = b.bx_at(mesh, ci, cj);
      const double* et = b.by_at(mesh, ci, cj + 1);
      const double* eb = b.by_at(mesh, ci, cj);
      for (int q = 0; q < n; ++q) {
        double vr = 0, vl = 0, vt = 0, vb = 0;
        for (int m = 0; m < nm; ++m) {
          vr += er[m] * Ve(q, m);
          vl += el[m] * Ve(q, m);
          vt += et[m] * Ve(q, m);
          vb += eb[m] * Ve(q, m);
        }
        r.max_trace_mismatch = std::max(
            {r.max_trace_mismatch,
             std::abs(U.node_ptr(ci, cj, n - 1, q)[BX] - vr),
             std::abs(U.node_ptr(ci, cj, 0, q)[BX] - vl),
             std::abs(U.node_ptr(ci, cj, q, n - 1)[BY] - vt),
             std::abs(U.node_ptr(ci, cj, q, 0)[BY] - vb)});
      }
    }
  return r;
}

Vec8 conserved_totals(const CellField& U, const Mesh& mesh,
                      const Operators& ops) {
  const int n = ops.n;
  const double cw = 0.25 * mesh.dx() * mesh.dy();
  std::array<kahan_sum, 8> acc;
  for (int cj = 0; cj < mesh.ny; ++cj)
    for (int ci = 0; ci < mesh.nx; ++ci)
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1) {
          const double w = cw * ops.weights(i1) * ops.weights(j1);
          const double* p = U.node_ptr(ci, cj, i1, j1);
          for (int c = 0; c < 8; ++c) acc[c].add(w * p[c]);
        }
  Vec8 total{};
  for (int c = 0; c < 8; ++c) total[c] = acc[c].s;
  return total;
}

std::vector<double> entropy_balance_residual(const CellField& U,
                                             const EdgeField& b,
                                             const Mesh& mesh,
                                             const Operators& ops,
                                             double gamma) {
  const int n = ops.n;
  const int nm = b.nm;
  const Eigen::MatrixXd Ve = ops.V.leftCols(nm);
  const FluxCache fc = compute_fluxes(U, mesh, ops, gamma);
  CellField rhs = CellField::zeros(mesh.nx, mesh.ny, n);
  cell_rhs(U, fc, mesh, ops, gamma, rhs);

  std::vector<double> res(static_cast<size_t>(mesh.nx) * mesh.ny, 0.0);
  const double cw = 0.25 * mesh.dx() * mesh.dy();
  for (int cj = 0; cj < mesh.ny; ++cj)
    for (int ci = 0; ci < mesh.nx; ++ci) {
      double dsdt = 0.0;
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1) {
          const Vec8 u = U.node(ci, cj, i1, j1);
          const Vec8 v = entropy_variables(u, gamma);
          dsdt += cw * ops.weights(i1) * ops.weights(j1) *
                  dot8(v, rhs.node(ci, cj, i1, j1));
        }
      const double* el = b.bx_at(mesh, ci, cj);
      const double* er = b.bx_at(mesh, ci + 1, cj);
      const double* eb = b.by_at(mesh, ci, cj);
      const double* et = b.by_at(mesh, ci, cj + 1);
      double xsum = 0.0, ysum = 0.0;
      for (int q = 0; q < n; ++q) {
        double bxl = 0, bxr = 0, byb = 0, byt = 0;
        for (int m = 0; m < nm; ++m) {
          bxl += el[m] * Ve(q, m);
          bxr += er[m] * Ve(q, m);
          byb += eb[m] * Ve(q, m);
          byt += et[m] * Ve(q, m);
        }
        const Vec8 uR = U.node(ci, cj, n - 1, q);
        const Vec8 uL = U.node(ci, cj, 0, q);
        const Vec8 fR = [&] {
          Vec8 f;
          const double* p = fc.fx_at(mesh, ci + 1, cj, q);
          for (int c = 0; c < 8; ++c) f[c] = p[c];
          return f;
        }();
        const Vec8 fL = [&] {
          Vec8 f;
          const double* p = fc.fx_at(mesh, ci, cj, q);
          for (int c = 0; c < 8; ++c) f[c] = p[c];
          return f;
        }();
        const double FsR = dot8(entropy_variables(uR, gamma), fR) -
                           psi_x(uR, gamma) + phi_pot(uR, gamma) * bxr;
        const double FsL = dot8(entropy_variables(uL, gamma), fL) -
                           psi_x(uL, gamma) + phi_pot(uL, gamma) * bxl;
        xsum += 0.5 * mesh.dy() * ops.weights(q) * (FsR - FsL);

        const Vec8 uT = U.node(ci, cj, q, n - 1);
        const Vec8 uB = U.node(ci, cj, q, 0);
        const Vec8 gT = [&] {
          Vec8 f;
          const double* p = fc.fy_at(mesh, ci, cj + 1, q);
          for (int c = 0; c < 8; ++c) f[c] = p[c];
          return f;
        }();
        const Vec8 gB = [&] {
          Vec8 f;
          const double* p = fc.fy_at(mesh, ci, cj, q);
          for (int c = 0; c < 8; ++c) f[c] = p[c];
          return f;
        }();
        const double GsT = dot8(entropy_variables(uT, gamma), gT) -
                           psi_y(uT, gamma) + phi_pot(uT, gamma) * byt;
        const double GsB = dot8(entropy_variables(uB, gamma), gB) -
                           psi_y(uB, gamma) + phi_pot(uB, gamma) * byb;
        ysum += 0.5 * mesh.dx() * ops.weights(q) * (GsT - GsB);
      }
      res[static_cast<size_t>(cj) * mesh.nx + ci] = dsdt + xsum + ysum;
    }
  return res;
}

std::array<double, 8> l2_error(
    const CellField& U, const Mesh& mesh, const Operators& ops,
    const std::function<Vec8(double, double)>& exact) {
  const int n = ops.n;
  const double cw = 0.25 * mesh.dx() * mesh.dy();
  std::array<double, 8> acc{};
  for (int cj = 0; cj < mesh.ny; ++cj)
    for (int ci = 0; ci < mesh.nx; ++ci)
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1) {
          const double w = cw * ops.weights(i1) * ops.weights(j1);
          const Vec8 ue =
              exact(mesh.node_x(ops, ci, i1), mesh.node_y(ops, cj, j1));
          const double* p = U.node_ptr(ci, cj, i1, j1);
          for (int c = 0; c < 8; ++c) {
            const double d = p[c] - ue[c];
            acc[c] += w * d * d;
          }
        }
  for (double& v : acc) v = std::sqrt(v);
  return acc;
}

double min_pressure(const CellField& U, const Mesh& mesh,
                    const Operators& ops, double gamma) {
  double pmin = std::numeric_limits<double>::infinity();
  for (int cj = 0; cj < mesh.ny; ++cj)
    for (int ci = 0; ci < mesh.nx; ++ci)
      for (int j1 = 0; j1 < ops.n; ++j1)
        for (int i1 = 0; i1 < ops.n; ++i1)
          pmin = std::min(pmin,
                          pressure(U.node(ci, cj, i1, j1), gamma));
  return pmin;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* kDiagnosticsHeader =
    "step,time,dt,total_entropy,div_norm,drift_rho,drift_mom,drift_energy,"
    "drift_B,theta_min,p_min,energy_correction_cum";

void write_diagnostics_row(std::ostream& os, const DiagnosticsRow& r) {
  os << r.step << ',' << format_g17(r.time) << ',' << format_g17(r.dt) << ','
     << format_g17(r.total_entropy) << ',' << format_g17(r.div_norm) << ','
     << format_g17(r.drift_rho) << ',' << format_g17(r.drift_mom) << ','
     << format_g17(r.drift_energy) << ',' << format_g17(r.drift_B) << ','
     << format_g17(r.theta_min) << ',' << format_g17(r.p_min) << ','
     << format_g17(r.energy_correction_cum) << '\n';
}

namespace {

void snapshot_fields(const CellField& U, const Mesh& mesh,
                     const Operators& ops, double gamma,
                     const std::function<void(double, double, const double*,
                                              double, double)>& emit) {
  const int n = ops.n;
  for (int j = 0; j < mesh.ny * n; ++j) {
    const int cj = j / n, j1 = j % n;
    for (int i = 0; i < mesh.nx * n; ++i) {
      const int ci = i / n, i1 = i % n;
      const double* p = U.node_ptr(ci, cj, i1, j1);
      const Vec8 u = U.node(ci, cj, i1, j1);
      const double pr = pressure(u, gamma);
      const double bmag =
          std::sqrt(u[BX] * u[BX] + u[BY] * u[BY] + u[BZ] * u[BZ]);
      emit(mesh.node_x(ops, ci, i1), mesh.node_y(ops, cj, j1), p, pr, bmag);
    }
  }
}

}  // namespace

void write_vtk_snapshot(const std::string& path, const CellField& U,
                        const Mesh& mesh, const Operators& ops,
                        double gamma) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open snapshot file: " + path);
  const int n = ops.n;
  const long npts = static_cast<long>(mesh.nx) * n * mesh.ny * n;
  os << "# vtk DataFile Version 3.0\n"
     << "mhd2d snapshot\n"
     << "ASCII\n"
     << "DATASET STRUCTURED_GRID\n"
     << "DIMENSIONS " << mesh.nx * n << ' ' << mesh.ny * n << " 1\n"
     << "POINTS " << npts << " double\n";
  snapshot_fields(U, mesh, ops, gamma,
                  [&](double x, double y, const double*, double, double) {
                    os << format_g17(x) << ' ' << format_g17(y) << " 0\n";
                  });
  os << "POINT_DATA " << npts << '\n';
  static const char* names[10] = {"rho", "mx", "my", "mz", "E",
                                  "Bx",  "By", "Bz", "p",  "Bmag"};
  for (int f = 0; f < 10; ++f) {
    os << "SCALARS " << names[f] << " double 1\n"
       << "LOOKUP_TABLE default\n";
    snapshot_fields(
        U, mesh, ops, gamma,
        [&](double, double, const double* p, double pr, double bmag) {
          const double v = (f < 8) ? p[f] : (f == 8 ? pr : bmag);
          os << format_g17(v) << '\n';
        });
  }
}

void write_csv_snapshot(const std::string& path, const CellField& U,
                        const Mesh& mesh, const Operators& ops,
                        double gamma) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open snapshot file: " + path);
  os << "x,y,rho,mx,my,mz,E,Bx,By,Bz,p,Bmag\n";
  snapshot_fields(U, mesh, ops, gamma,
                  [&](double x, double y, const double* p, double pr,
                      double bmag) {
                    os << format_g17(x) << ',' << format_g17(y);
                    for (int c = 0; c < 8; ++c) os << ',' << format_g17(p[c]);
                    os << ',' << format_g17(pr) << ',' << format_g17(bmag)
                       << '\n';
                  });
}

}  // namespace esdg
