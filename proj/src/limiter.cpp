#include "esdg/limiter.hpp"

#include <algorithm>
#include <cmath>

#include "esdg/state.hpp"

namespace esdg {

namespace {

// Derivative stacks: nodal values of D_x^{l1} D_y^{l2} u for all l1+l2 <=
// k+1, laid out per (pair, node, component).  Reference derivatives are
// used; the 2^(l1+l2) from the reference-to-physical factor combined with
// the dx^l1 dy^l2 prefactor of the intensity sum is folded into the pair
// weight.
struct PairSet {
  struct P {
    int l1, l2;
    int pred;    // index of the stack this one is derived from
    bool via_x;  // apply D in x (true) or y (false) to pred
    double weight;
  };
  std::vector<P> pairs;  // pairs[0] = (0,0) base
};

PairSet make_pairs(int k) {
  PairSet ps;
  ps.pairs.push_back({0, 0, -1, false, 0.0});
  for (int l = 1; l <= k + 1; ++l)
    for (int l1 = l; l1 >= 0; --l1) {
      const int l2 = l - l1;
      int pred = -1;
      bool via_x = true;
      for (size_t i = 0; i < ps.pairs.size(); ++i) {
        if (ps.pairs[i].l1 == l1 - 1 && ps.pairs[i].l2 == l2) {
          pred = static_cast<int>(i);
          via_x = true;
          break;
        }
        if (ps.pairs[i].l1 == l1 && ps.pairs[i].l2 == l2 - 1) {
          pred = static_cast<int>(i);
          via_x = false;
          break;
        }
      }
      const double w = l * (l + 1.0) * std::pow(2.0, l);
      ps.pairs.push_back({l1, l2, pred, via_x, w});
    }
  return ps;
}

// nodal derivative stack of one (possibly ghost) cell
void build_stack(const CellField& U, const Mesh& mesh, const Operators& ops,
                 double gamma, const PairSet& ps, int ci, int cj,
                 std::vector<double>& stack) {
  const int n = ops.n;
  const int nn = n * n;
  const size_t stride = static_cast<size_t>(nn) * 8;
  stack.assign(ps.pairs.size() * stride, 0.0);
  for (int j1 = 0; j1 < n; ++j1)
    for (int i1 = 0; i1 < n; ++i1) {
      const Vec8 u = cell_node_bc(U, mesh, ops, gamma, ci, cj, i1, j1);
      for (int c = 0; c < 8; ++c) stack[(j1 * n + i1) * 8 + c] = u[c];
    }
  for (size_t p = 1; p < ps.pairs.size(); ++p) {
    const auto& pr = ps.pairs[p];
    const double* src = stack.data() + pr.pred * stride;
    double* dst = stack.data() + p * stride;
    if (pr.via_x) {
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1)
          for (int c = 0; c < 8; ++c) {
            double acc = 0.0;
            for (int l = 0; l < n; ++l)
              acc += ops.D(i1, l) * src[(j1 * n + l) * 8 + c];
            dst[(j1 * n + i1) * 8 + c] = acc;
          }
    } else {
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1)
          for (int c = 0; c < 8; ++c) {
            double acc = 0.0;
            for (int l = 0; l < n; ++l)
              acc += ops.D(j1, l) * src[(l * n + i1) * 8 + c];
            dst[(j1 * n + i1) * 8 + c] = acc;
          }
    }
  }
}

}  // namespace

std::vector<double> jump_indicator(const CellField& U, const Mesh& mesh,
                                   const Operators& ops, double gamma,
                                   const LimiterParams& params, double dt) {
  const int nx = mesh.nx, ny = mesh.ny, n = ops.n, k = ops.k;
  std::vector<double> theta(static_cast<size_t>(nx) * ny, 1.0);
  if (!params.enabled || k == 0) return theta;

  const PairSet ps = make_pairs(k);
  const size_t npairs = ps.pairs.size();
  const size_t stride = static_cast<size_t>(n) * n * 8;

  // weighted jump-intensity accumulator per cell and component
  std::vector<double> acc(static_cast<size_t>(nx) * ny * 8, 0.0);
  auto add_jump = [&](int ci, int cj, size_t p, double s, int c) {
    if (ci < 0 || ci >= nx || cj < 0 || cj >= ny) return;
    acc[(static_cast<size_t>(cj) * nx + ci) * 8 + c] +=
        ps.pairs[p].weight * s;
  };

  // rolling rows of stacks for cells ci = -1..nx (ghosts at both ends)
  std::vector<std::vector<double>> prev(nx + 2), cur(nx + 2);
  auto fill_row = [&](int cj, std::vector<std::vector<double>>& row) {
    for (int ci = -1; ci <= nx; ++ci)
      build_stack(U, mesh, ops, gamma, ps, ci, cj, row[ci + 1]);
  };
  fill_row(-1, prev);

  for (int cj = 0; cj <= ny; ++cj) {
    if (cj < ny)
      fill_row(cj, cur);
    else
      fill_row(ny, cur);  // ghost row above the domain
    // horizontal interface between rows cj-1 (prev) and cj (cur)
    for (int ci = 0; ci < nx; ++ci) {
      const double* lo = prev[ci + 1].data();
      const double* hi = cur[ci + 1].data();
      for (size_t p = 1; p < npairs; ++p)
        for (int c = 0; c < 8; ++c) {
          double s = 0.0;
          for (int q = 0; q < n; ++q)
            s += ops.weights(q) *
                 std::abs(hi[p * stride + (0 * n + q) * 8 + c] -
                          lo[p * stride + ((n - 1) * n + q) * 8 + c]);
          add_jump(ci, cj, p, s, c);
          add_jump(ci, cj - 1, p, s, c);
        }
    }
    // vertical interfaces within row cj
    if (cj < ny)
      for (int ie = 0; ie <= nx; ++ie) {
        const double* le = cur[ie - 1 + 1].data();
        const double* ri = cur[ie + 1].data();
        for (size_t p = 1; p < npairs; ++p)
          for (int c = 0; c < 8; ++c) {
            double s = 0.0;
            for (int q = 0; q < n; ++q)
              s += ops.weights(q) *
                   std::abs(ri[p * stride + (q * n + 0) * 8 + c] -
                            le[p * stride + (q * n + (n - 1)) * 8 + c]);
            add_jump(ie, cj, p, s, c);
            add_jump(ie - 1, cj, p, s, c);
          }
      }
    std::swap(prev, cur);
  }

  const double area = std::sqrt(mesh.dx() * mesh.dy());
  const double cnorm = params.c0 / (4.0 * k * (k + 1.0));
  for (int cj = 0; cj < ny; ++cj)
    for (int ci = 0; ci < nx; ++ci) {
      // c_f = c0/(4k(k+1)) * max over nodes of rho/(E + p_star)
      double invh = 0.0;
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1) {
          const Vec8 u = U.node(ci, cj, i1, j1);
          const double b2 =
              u[BX] * u[BX] + u[BY] * u[BY] + u[BZ] * u[BZ];
          const double pstar = pressure(u, gamma) + 0.5 * b2;
          invh = std::max(invh, u[RHO] / (u[EN] + pstar));
        }
      const double cf = cnorm * invh;
      double sigma = 0.0;
      for (int c = 0; c < 8; ++c)
        sigma = std::max(
            sigma, acc[(static_cast<size_t>(cj) * nx + ci) * 8 + c]);
      sigma *= cf * area;
      // nodal differentiation of locally constant data leaves round-off
      // residue in the jump sums; clamp sub-round-off damping exponents so
      // uniform regions pass through bitwise untouched
      const double ex = sigma * dt;
      theta[static_cast<size_t>(cj) * nx + ci] =
          (ex < 1e-13) ? 1.0 : std::exp(-ex);
    }
  return theta;
}

void scale_cell(CellField& U, const std::vector<double>& theta,
                const Operators& ops) {
  const int n = U.n;
  for (int cj = 0; cj < U.ny; ++cj)
    for (int ci = 0; ci < U.nx; ++ci) {
      const double th = theta[static_cast<size_t>(cj) * U.nx + ci];
      if (th == 1.0) continue;
      Vec8 mean{};
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1) {
          const double w = 0.25 * ops.weights(i1) * ops.weights(j1);
          const double* p = U.node_ptr(ci, cj, i1, j1);
          for (int c = 0; c < 8; ++c) mean[c] += w * p[c];
        }
      for (int j1 = 0; j1 < n; ++j1)
        for (int i1 = 0; i1 < n; ++i1) {
          double* p = U.node_ptr(ci, cj, i1, j1);
          for (int c = 0; c < 8; ++c)
            p[c] = mean[c] + th * (p[c] - mean[c]);
        }
    }
}

void scale_edges(EdgeField& b, const std::vector<double>& theta,
                 const Mesh& mesh) {
  const int nx = mesh.nx, ny = mesh.ny, nm = b.nm;
  if (nm < 2) return;
  auto th_cell = [&](int ci, int cj) -> double {
    // theta is cell-attached, so ghost neighbours resolve the same way the
    // state samples do: shifted wrap first (it moves the column), then the
    // plain wraps; anything still outside the domain leaves edges alone
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
    if (mesh.wrap_x()) ci = ((ci % nx) + nx) % nx;
    if (mesh.wrap_y()) cj = ((cj % ny) + ny) % ny;
    if (ci < 0 || ci >= nx || cj < 0 || cj >= ny) return 1.0;
    return theta[static_cast<size_t>(cj) * nx + ci];
  };
  for (int j = 0; j < ny; ++j)
    for (int ie = 0; ie < b.cols; ++ie) {
      const double t = std::min(th_cell(ie - 1, j), th_cell(ie, j));
      if (t == 1.0) continue;
      double* e = b.bx.data() + (static_cast<size_t>(j) * b.cols + ie) * nm;
      for (int m = 1; m < nm; ++m) e[m] *= t;
    }
  for (int je = 0; je < b.rows; ++je)
    for (int i = 0; i < nx; ++i) {
      const double t = std::min(th_cell(i, je - 1), th_cell(i, je));
      if (t == 1.0) continue;
      double* e = b.by.data() + (static_cast<size_t>(je) * nx + i) * nm;
      for (int m = 1; m < nm; ++m) e[m] *= t;
    }
}

}  // namespace esdg
