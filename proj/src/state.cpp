#include "esdg/state.hpp"

#include <sstream>
#include <stdexcept>

#include "esdg/flux.hpp"

namespace esdg {

Vec8 prim_to_cons(const Prim& w, double gamma) {
  Vec8 u;
  u[RHO] = w.rho;
  u[MX] = w.rho * w.ux;
  u[MY] = w.rho * w.uy;
  u[MZ] = w.rho * w.uz;
  u[BX] = w.Bx;
  u[BY] = w.By;
  u[BZ] = w.Bz;
  const double kin = 0.5 * w.rho * (w.ux * w.ux + w.uy * w.uy + w.uz * w.uz);
  const double mag = 0.5 * (w.Bx * w.Bx + w.By * w.By + w.Bz * w.Bz);
  u[EN] = w.p / (gamma - 1.0) + kin + mag;
  return u;
}

Prim cons_to_prim(const Vec8& u, double gamma) {
  Prim w;
  w.rho = u[RHO];
  if (!(w.rho > kAdmissibleTol)) {
    std::ostringstream os;
    os << "inadmissible state: rho = " << w.rho;
    throw std::runtime_error(os.str());
  }
  w.ux = u[MX] / w.rho;
  w.uy = u[MY] / w.rho;
  w.uz = u[MZ] / w.rho;
  w.Bx = u[BX];
  w.By = u[BY];
  w.Bz = u[BZ];
  const double kin = 0.5 * (u[MX] * w.ux + u[MY] * w.uy + u[MZ] * w.uz);
  const double mag = 0.5 * (u[BX] * u[BX] + u[BY] * u[BY] + u[BZ] * u[BZ]);
  w.p = (gamma - 1.0) * (u[EN] - kin - mag);
  if (!(w.p > kAdmissibleTol)) {
    std::ostringstream os;
    os << "inadmissible state: p = " << w.p;
    throw std::runtime_error(os.str());
  }
  return w;
}

double pressure(const Vec8& u, double gamma) {
  const double kin =
      0.5 * (u[MX] * u[MX] + u[MY] * u[MY] + u[MZ] * u[MZ]) / u[RHO];
  const double mag = 0.5 * (u[BX] * u[BX] + u[BY] * u[BY] + u[BZ] * u[BZ]);
  return (gamma - 1.0) * (u[EN] - kin - mag);
}

bool admissible(const Vec8& u, double gamma) {
  if (!(u[RHO] > kAdmissibleTol) || !std::isfinite(u[RHO])) return false;
  const double p = pressure(u, gamma);
  return p > kAdmissibleTol && std::isfinite(p);
}

double entropy_density(const Vec8& u, double gamma) {
  const double p = pressure(u, gamma);
  const double s = std::log(p) - gamma * std::log(u[RHO]);
  return -u[RHO] * s / (gamma - 1.0);
}

double entropy_flux_x(const Vec8& u, double gamma) {
  const double p = pressure(u, gamma);
  const double s = std::log(p) - gamma * std::log(u[RHO]);
  return -u[MX] * s / (gamma - 1.0);
}

double entropy_flux_y(const Vec8& u, double gamma) {
  const double p = pressure(u, gamma);
  const double s = std::log(p) - gamma * std::log(u[RHO]);
  return -u[MY] * s / (gamma - 1.0);
}

Vec8 entropy_variables(const Vec8& u, double gamma) {
  const Prim w = cons_to_prim(u, gamma);
  const double beta = 0.5 * w.rho / w.p;
  const double s = std::log(w.p) - gamma * std::log(w.rho);
  const double usq = w.ux * w.ux + w.uy * w.uy + w.uz * w.uz;
  Vec8 v;
  v[RHO] = (gamma - s) / (gamma - 1.0) - beta * usq;
  v[MX] = 2.0 * beta * w.ux;
  v[MY] = 2.0 * beta * w.uy;
  v[MZ] = 2.0 * beta * w.uz;
  v[EN] = -2.0 * beta;
  v[BX] = 2.0 * beta * w.Bx;
  v[BY] = 2.0 * beta * w.By;
  v[BZ] = 2.0 * beta * w.Bz;
  return v;
}

double psi_x(const Vec8& u, double gamma) {
  const Prim w = cons_to_prim(u, gamma);
  const double beta = 0.5 * w.rho / w.p;
  const double b2 = w.Bx * w.Bx + w.By * w.By + w.Bz * w.Bz;
  return w.rho * w.ux + beta * w.ux * b2;
}

double psi_y(const Vec8& u, double gamma) {
  const Prim w = cons_to_prim(u, gamma);
  const double beta = 0.5 * w.rho / w.p;
  const double b2 = w.Bx * w.Bx + w.By * w.By + w.Bz * w.Bz;
  return w.rho * w.uy + beta * w.uy * b2;
}

double phi_pot(const Vec8& u, double gamma) {
  const Prim w = cons_to_prim(u, gamma);
  const double beta = 0.5 * w.rho / w.p;
  return 2.0 * beta * (w.ux * w.Bx + w.uy * w.By + w.uz * w.Bz);
}

}  // namespace esdg
