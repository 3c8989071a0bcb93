// Cartesian mesh, nodal cell fields, interface edge fields and boundary
// handling (periodic, column-shifted periodic, Dirichlet far field,
// reflective walls).
//
// Cell nodal storage: value(ci, cj, i1, j1, comp), x-node index i1 fastest
// within a cell. Edge storage keeps, per interface, the k+1 Legendre
// coefficients of the normal magnetic-field polynomial.

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "esdg/operators.hpp"
#include "esdg/state.hpp"

namespace esdg {

enum class BCType { Periodic, ShiftedPeriodic, Dirichlet, Reflective };

struct BCSet {
  BCType x = BCType::Periodic;  // left/right boundary pair
  BCType y = BCType::Periodic;  // bottom/top boundary pair
  // ShiftedPeriodic in y samples ghost cells from the interior shifted by
  // this many columns (top ghosts shift right, bottom ghosts left); where
  // the shifted column leaves the domain the x boundary condition applies
  int shift = 0;
  // far-field primitive profile for Dirichlet sides; must be evaluable at
  // ghost positions slightly outside the domain
  std::function<Prim(double, double)> dirichlet;
};

struct Mesh {
  int nx = 1, ny = 1;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  BCSet bc;

  double dx() const { return (x1 - x0) / nx; }
  double dy() const { return (y1 - y0) / ny; }
  bool wrap_x() const { return bc.x == BCType::Periodic; }
  // only plain periodic y identifies the two rows of boundary interfaces;
  // a shifted-periodic seam keeps its own top row (the identification
  // would not be single-valued on the stored edge polynomials)
  bool wrap_y() const { return bc.y == BCType::Periodic; }
  // owned interface counts (wrapped boundaries identify the two sides)
  int edge_cols() const { return wrap_x() ? nx : nx + 1; }
  int edge_rows() const { return wrap_y() ? ny : ny + 1; }
  int vertex_cols() const { return wrap_x() ? nx : nx + 1; }
  int vertex_rows() const { return wrap_y() ? ny : ny + 1; }

  double node_x(const Operators& ops, int ci, int i1) const {
    return x0 + dx() * (ci + 0.5 * (1.0 + ops.nodes(i1)));
  }
  double node_y(const Operators& ops, int cj, int j1) const {
    return y0 + dy() * (cj + 0.5 * (1.0 + ops.nodes(j1)));
  }

  // maps a logical vertical-interface index (ie in [0, nx], j in [0, ny-1])
  // to the owned storage slot
  std::pair<int, int> vedge(int ie, int j) const {
    if (wrap_x()) ie = ((ie % nx) + nx) % nx;
    return {ie, j};
  }
  // horizontal interface (i in [0, nx-1], je in [0, ny])
  std::pair<int, int> hedge(int i, int je) const {
    if (wrap_y() && je == ny) je = 0;
    return {i, je};
  }
  // vertex (iv in [0, nx], jv in [0, ny])
  std::pair<int, int> vertex(int iv, int jv) const {
    if (wrap_y() && jv == ny) jv = 0;
    if (wrap_x()) iv = ((iv % nx) + nx) % nx;
    return {iv, jv};
  }
};

// ---------------------------------------------------------------------------

struct CellField {
  int nx = 0, ny = 0, n = 0;
  std::vector<double> a;

  static CellField zeros(int nx, int ny, int n) {
    CellField f;
    f.nx = nx;
    f.ny = ny;
    f.n = n;
    f.a.assign(static_cast<size_t>(nx) * ny * n * n * 8, 0.0);
    return f;
  }

  size_t offset(int ci, int cj, int i1, int j1) const {
    return ((static_cast<size_t>(cj) * nx + ci) * n * n +
            static_cast<size_t>(j1) * n + i1) *
           8;
  }
  double* node_ptr(int ci, int cj, int i1, int j1) {
    return a.data() + offset(ci, cj, i1, j1);
  }
  const double* node_ptr(int ci, int cj, int i1, int j1) const {
    return a.data() + offset(ci, cj, i1, j1);
  }
  Vec8 node(int ci, int cj, int i1, int j1) const {
    const double* p = node_ptr(ci, cj, i1, j1);
    Vec8 u;
    for (int c = 0; c < 8; ++c) u[c] = p[c];
    return u;
  }
  void set_node(int ci, int cj, int i1, int j1, const Vec8& u) {
    double* p = node_ptr(ci, cj, i1, j1);
    for (int c = 0; c < 8; ++c) p[c] = u[c];
  }

  void axpy(double alpha, const CellField& other) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += alpha * other.a[i];
  }
  // this = ca*A + cb*B
  void combine(double ca, const CellField& A, double cb, const CellField& B) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = ca * A.a[i] + cb * B.a[i];
  }
};

// Legendre coefficients of the normal magnetic field on every interface.
struct EdgeField {
  int nx = 0, ny = 0, nm = 0;  // nm = k+1 coefficients per edge
  int cols = 0, rows = 0;      // owned vertical columns / horizontal rows
  std::vector<double> bx;      // vertical edges, slot (ie, j)
  std::vector<double> by;      // horizontal edges, slot (i, je)

  static EdgeField zeros(const Mesh& mesh, int nm) {
    EdgeField e;
    e.nx = mesh.nx;
    e.ny = mesh.ny;
    e.nm = nm;
    e.cols = mesh.edge_cols();
    e.rows = mesh.edge_rows();
    e.bx.assign(static_cast<size_t>(e.cols) * e.ny * nm, 0.0);
    e.by.assign(static_cast<size_t>(e.nx) * e.rows * nm, 0.0);
    return e;
  }

  double* bx_at(const Mesh& mesh, int ie, int j) {
    auto [i, jj] = mesh.vedge(ie, j);
    return bx.data() + (static_cast<size_t>(jj) * cols + i) * nm;
  }
  const double* bx_at(const Mesh& mesh, int ie, int j) const {
    auto [i, jj] = mesh.vedge(ie, j);
    return bx.data() + (static_cast<size_t>(jj) * cols + i) * nm;
  }
  double* by_at(const Mesh& mesh, int i, int je) {
    auto [ii, jj] = mesh.hedge(i, je);
    return by.data() + (static_cast<size_t>(jj) * nx + ii) * nm;
  }
  const double* by_at(const Mesh& mesh, int i, int je) const {
    auto [ii, jj] = mesh.hedge(i, je);
    return by.data() + (static_cast<size_t>(jj) * nx + ii) * nm;
  }

  void axpy(double alpha, const EdgeField& other) {
    for (size_t i = 0; i < bx.size(); ++i) bx[i] += alpha * other.bx[i];
    for (size_t i = 0; i < by.size(); ++i) by[i] += alpha * other.by[i];
  }
  void combine(double ca, const EdgeField& A, double cb, const EdgeField& B) {
    for (size_t i = 0; i < bx.size(); ++i) bx[i] = ca * A.bx[i] + cb * B.bx[i];
    for (size_t i = 0; i < by.size(); ++i) by[i] = ca * A.by[i] + cb * B.by[i];
  }

  // edge polynomial value at reference coordinate t in [-1,1]
  double eval(const double* coeff, double t) const;
};

// Nodal value at a possibly-out-of-range cell (ci,cj): wraps, shifts,
// mirrors (negating the wall-normal velocity and magnetic components) or
// evaluates the Dirichlet far-field profile as dictated by mesh.bc.
Vec8 cell_node_bc(const CellField& U, const Mesh& mesh, const Operators& ops,
                  double gamma, int ci, int cj, int i1, int j1);

}  // namespace esdg
