// Physical, entropy-conservative and HLL fluxes for 2D ideal MHD, plus the
// vertex (two-dimensional) HLL electric-field solver.
//
// All y-direction quantities are obtained from the x-direction formulas by
// the exact symmetry G(U) = P F(P U), where P swaps the x/y momentum slots
// and the Bx/By slots.

#pragma once

#include "esdg/state.hpp"

namespace esdg {

enum class Dir { X, Y };

// swaps (mx,my) and (Bx,By): the x<->y relabeling used for Dir::Y
inline Vec8 swap_xy(const Vec8& u) {
  Vec8 r = u;
  r[MX] = u[MY];
  r[MY] = u[MX];
  r[BX] = u[BY];
  r[BY] = u[BX];
  return r;
}

Vec8 physical_flux(const Vec8& u, double gamma, Dir d);

// Logarithmic mean (a_R - a_L)/(ln a_R - ln a_L) with a series branch when
// |ln a_R - ln a_L| < 1e-4 to keep full accuracy for nearby arguments.
double log_mean(double al, double ar);

// Entropy-conservative two-point volume flux (symmetric, consistent).
Vec8 ec_flux(const Vec8& ul, const Vec8& ur, double gamma, Dir d);

struct WaveSpeeds {
  double sl = 0.0;
  double sr = 0.0;
};

// Three-wave (left/right fan) speed estimates for the interface HLL flux;
// built from the pressure-based relaxation bounds so the resulting HLL
// intermediate state stays admissible.
WaveSpeeds bouchut_speeds(const Vec8& ul, const Vec8& ur, double gamma, Dir d);

// Largest signal speed |lambda_max| direction d at a single state
// (fast magnetosonic speed shifted by the normal velocity is handled by
// callers; this returns c_f alone).
double fast_speed(const Vec8& u, double gamma, Dir d);

// HLL interface flux with speeds clipped to (min(S_L,0), max(S_R,0)).
Vec8 hll_flux(const Vec8& ul, const Vec8& ur, double gamma, Dir d);
// variant that also reports the clipped speeds actually used
Vec8 hll_flux(const Vec8& ul, const Vec8& ur, double gamma, Dir d,
              WaveSpeeds& clipped);

// Pointwise z-electric field E_z = uy*Bx - ux*By.
double ez_point(const Vec8& u);

// Two-dimensional HLL electric field at a cell vertex from the four
// surrounding corner states (LD/RD: below, LU/RU: above the vertex).
double vertex_ez(const Vec8& uld, const Vec8& urd, const Vec8& ulu,
                 const Vec8& uru, double gamma);

}  // namespace esdg
