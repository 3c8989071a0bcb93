// Ideal-MHD state vectors, the ideal-gas EOS, and the entropy pair.
//
// Conserved layout: U = (rho, rho*ux, rho*uy, rho*uz, E, Bx, By, Bz) with
//   E = p/(gamma-1) + rho|u|^2/2 + |B|^2/2.
// The entropy function is Ent(U) = -rho*s/(gamma-1) with s = ln(p*rho^-gamma);
// its variables V = dEnt/dU and the potentials psi/phi below are what the
// entropy-conservative volume flux is tested against.

#pragma once

#include <array>
#include <cmath>

namespace esdg {

using Vec8 = std::array<double, 8>;

// component indices
inline constexpr int RHO = 0;
inline constexpr int MX = 1;
inline constexpr int MY = 2;
inline constexpr int MZ = 3;
inline constexpr int EN = 4;
inline constexpr int BX = 5;
inline constexpr int BY = 6;
inline constexpr int BZ = 7;

// positivity floor below which a state is treated as unphysical (hard error)
inline constexpr double kAdmissibleTol = 1e-12;

struct Prim {
  double rho = 1.0;
  double ux = 0.0, uy = 0.0, uz = 0.0;
  double p = 1.0;
  double Bx = 0.0, By = 0.0, Bz = 0.0;
};

// --- small vector helpers -------------------------------------------------

inline Vec8 operator+(const Vec8& a, const Vec8& b) {
  Vec8 r;
  for (int c = 0; c < 8; ++c) r[c] = a[c] + b[c];
  return r;
}
inline Vec8 operator-(const Vec8& a, const Vec8& b) {
  Vec8 r;
  for (int c = 0; c < 8; ++c) r[c] = a[c] - b[c];
  return r;
}
inline Vec8 operator*(double s, const Vec8& a) {
  Vec8 r;
  for (int c = 0; c < 8; ++c) r[c] = s * a[c];
  return r;
}
inline Vec8& operator+=(Vec8& a, const Vec8& b) {
  for (int c = 0; c < 8; ++c) a[c] += b[c];
  return a;
}
inline double dot8(const Vec8& a, const Vec8& b) {
  double r = 0.0;
  for (int c = 0; c < 8; ++c) r += a[c] * b[c];
  return r;
}

// --- EOS / conversions ----------------------------------------------------

Vec8 prim_to_cons(const Prim& w, double gamma);

// Throws std::runtime_error if rho or p falls at/below the admissibility floor.
Prim cons_to_prim(const Vec8& u, double gamma);

double pressure(const Vec8& u, double gamma);
bool admissible(const Vec8& u, double gamma);

// --- entropy pair ---------------------------------------------------------

double entropy_density(const Vec8& u, double gamma);   // -rho s/(gamma-1)
double entropy_flux_x(const Vec8& u, double gamma);    // -rho ux s/(gamma-1)
double entropy_flux_y(const Vec8& u, double gamma);
Vec8 entropy_variables(const Vec8& u, double gamma);

// psi_x = rho ux + beta ux |B|^2 = V.F(U) - entropy_flux_x + phi Bx
// (entropy flux potential of the x-flux), same pattern in y
double psi_x(const Vec8& u, double gamma);
double psi_y(const Vec8& u, double gamma);

// phi = 2 beta (u.B): the auxiliary potential multiplying the magnetic
// nonconservative term in the entropy-conservation identity
double phi_pot(const Vec8& u, double gamma);

}  // namespace esdg
