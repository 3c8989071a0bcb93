// Pointwise flux kernels: physical flux, log mean, entropy-conservative
// two-point flux, wave-speed estimates, HLL and the vertex electric field.

#include <cmath>
#include <random>

#include "doctest.h"
#include "esdg/flux.hpp"

using namespace esdg;

namespace {

const double kGamma = 5.0 / 3.0;

Vec8 random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(0.1, 3.0), any(-2.0, 2.0);
  Prim w;
  w.rho = pos(rng);
  w.p = pos(rng);
  w.ux = any(rng);
  w.uy = any(rng);
  w.uz = any(rng);
  w.Bx = any(rng);
  w.By = any(rng);
  w.Bz = any(rng);
  return prim_to_cons(w, kGamma);
}

}  // namespace

TEST_CASE("physical flux matches hand-assembled components") {
  Prim w;
  w.rho = 1.2;
  w.ux = 0.5;
  w.uy = -0.3;
  w.uz = 0.1;
  w.p = 0.8;
  w.Bx = 0.4;
  w.By = 0.6;
  w.Bz = -0.2;
  const Vec8 u = prim_to_cons(w, kGamma);
  const Vec8 f = physical_flux(u, kGamma, Dir::X);
  const double b2 = w.Bx * w.Bx + w.By * w.By + w.Bz * w.Bz;
  const double pstar = w.p + 0.5 * b2;
  const double udotb = w.ux * w.Bx + w.uy * w.By + w.uz * w.Bz;
  CHECK(f[RHO] == doctest::Approx(w.rho * w.ux).epsilon(1e-14));
  CHECK(f[MX] ==
        doctest::Approx(w.rho * w.ux * w.ux + pstar - w.Bx * w.Bx)
            .epsilon(1e-14));
  CHECK(f[MY] ==
        doctest::Approx(w.rho * w.ux * w.uy - w.Bx * w.By).epsilon(1e-14));
  CHECK(f[EN] == doctest::Approx(w.ux * (u[EN] + pstar) - w.Bx * udotb)
                     .epsilon(1e-13));
  CHECK(f[BX] == 0.0);
  CHECK(f[BY] ==
        doctest::Approx(w.ux * w.By - w.uy * w.Bx).epsilon(1e-14));
  CHECK(f[BZ] ==
        doctest::Approx(w.ux * w.Bz - w.uz * w.Bx).epsilon(1e-14));
}

TEST_CASE("y-direction flux is the swapped x-direction flux") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    const Vec8 u = random_state(rng);
    const Vec8 g = physical_flux(u, kGamma, Dir::Y);
    const Vec8 ref = swap_xy(physical_flux(swap_xy(u), kGamma, Dir::X));
    for (int c = 0; c < 8; ++c) CHECK(g[c] == ref[c]);
  }
}

TEST_CASE("logarithmic mean") {
  CHECK(log_mean(2.0, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
  const double e = std::exp(1.0);
  CHECK(log_mean(1.0, e) == doctest::Approx(e - 1.0).epsilon(1e-13));
  CHECK(log_mean(3.0, 5.0) == log_mean(5.0, 3.0));
  // series branch joins the direct formula smoothly
  const double a = 1.0, b = 1.0 + 2e-4;
  const double direct = (b - a) / std::log(b / a);
  CHECK(log_mean(a, b) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("entropy-conservative flux: consistency and symmetry") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    const Vec8 u = random_state(rng);
    const Vec8 f = ec_flux(u, u, kGamma, Dir::X);
    const Vec8 fp = physical_flux(u, kGamma, Dir::X);
    for (int c = 0; c < 8; ++c)
      CHECK(f[c] == doctest::Approx(fp[c]).epsilon(1e-12).scale(1.0));
    const Vec8 ul = random_state(rng), ur = random_state(rng);
    const Vec8 a = ec_flux(ul, ur, kGamma, Dir::X);
    const Vec8 b = ec_flux(ur, ul, kGamma, Dir::X);
    for (int c = 0; c < 8; ++c) CHECK(a[c] == b[c]);  // bitwise
  }
}

TEST_CASE("entropy-conservative flux satisfies the jump identity") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    const Vec8 ul = random_state(rng), ur = random_state(rng);
    for (Dir d : {Dir::X, Dir::Y}) {
      const Vec8 f = ec_flux(ul, ur, kGamma, d);
      const Vec8 dv =
          entropy_variables(ur, kGamma) - entropy_variables(ul, kGamma);
      const double psl = d == Dir::X ? psi_x(ul, kGamma) : psi_y(ul, kGamma);
      const double psr = d == Dir::X ? psi_x(ur, kGamma) : psi_y(ur, kGamma);
      const int cn = d == Dir::X ? BX : BY;
      const double rhs = (psr - psl) -
                         (phi_pot(ur, kGamma) - phi_pot(ul, kGamma)) *
                             0.5 * (ul[cn] + ur[cn]);
      const double lhs = dot8(dv, f);
      const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
      CHECK(std::abs(lhs - rhs) / scale < 1e-11);
    }
  }
}

TEST_CASE("wave speed estimates bound the fast speed") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    const Vec8 u = random_state(rng);
    const Prim w = cons_to_prim(u, kGamma);
    const WaveSpeeds ws = bouchut_speeds(u, u, kGamma, Dir::X);
    CHECK(ws.sl <= ws.sr);
    const double cf = fast_speed(u, kGamma, Dir::X);
    // equal states carry no relaxation jump: speeds are u_n -/+ c_f
    CHECK(ws.sl == doctest::Approx(w.ux - cf).epsilon(1e-12));
    CHECK(ws.sr == doctest::Approx(w.ux + cf).epsilon(1e-12));
  }
}

TEST_CASE("hll flux: consistency and upwinding") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 100; ++it) {
    const Vec8 u = random_state(rng);
    const Vec8 f = hll_flux(u, u, kGamma, Dir::X);
    const Vec8 fp = physical_flux(u, kGamma, Dir::X);
    for (int c = 0; c < 8; ++c)
      CHECK(f[c] == doctest::Approx(fp[c]).epsilon(1e-12).scale(1.0));
  }
  // supersonic flow to the right upwinds fully to the left state
  Prim wl, wr;
  wl.rho = 1.0;
  wl.ux = 30.0;
  wl.uy = wl.uz = 0.0;
  wl.p = 1.0;
  wl.Bx = 0.5;
  wl.By = 0.1;
  wl.Bz = 0.0;
  wr = wl;
  wr.rho = 0.9;
  const Vec8 ul = prim_to_cons(wl, kGamma), ur = prim_to_cons(wr, kGamma);
  const Vec8 f = hll_flux(ul, ur, kGamma, Dir::X);
  const Vec8 fl = physical_flux(ul, kGamma, Dir::X);
  for (int c = 0; c < 8; ++c) CHECK(f[c] == fl[c]);
}

TEST_CASE("hll flux dissipates entropy across shared-normal interfaces") {
  // interface traces share the edge polynomial for the normal field
  // component, so the dissipation bound is a statement about pairs with a
  // single normal value (the one-dimensional Riemann setting)
  std::mt19937_64 rng(31);
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
  double worst = -1e300;
  for (int it = 0; it < 2000; ++it)
    for (Dir d : {Dir::X, Dir::Y}) {
      const Prim pl = rand_prim();
      Prim pr = rand_prim();
      if (d == Dir::X) pr.Bx = pl.Bx;
      else pr.By = pl.By;
      const Vec8 ul = prim_to_cons(pl, kGamma), ur = prim_to_cons(pr, kGamma);
      const Vec8 f = hll_flux(ul, ur, kGamma, d);
      const Vec8 dv =
          entropy_variables(ur, kGamma) - entropy_variables(ul, kGamma);
      const double psl = d == Dir::X ? psi_x(ul, kGamma) : psi_y(ul, kGamma);
      const double psr = d == Dir::X ? psi_x(ur, kGamma) : psi_y(ur, kGamma);
      const int cn = d == Dir::X ? BX : BY;
      const double rhs = (psr - psl) -
                         (phi_pot(ur, kGamma) - phi_pot(ul, kGamma)) * 0.5 *
                             (ul[cn] + ur[cn]);
      worst = std::max(worst, dot8(dv, f) - rhs);
    }
  CHECK(worst <= 1e-12);
}

TEST_CASE("mirror states produce an exact-zero wall flux") {
  // interior state right of the wall, moving into it (compression)
  Prim w;
  w.rho = 1.7;
  w.ux = -0.83;
  w.uy = -0.41;
  w.uz = 0.09;
  w.p = 2.3;
  w.Bx = 0.77;
  w.By = 0.35;
  w.Bz = -0.6;
  const Vec8 u = prim_to_cons(w, kGamma);
  Vec8 ghost = u;
  ghost[MX] = -ghost[MX];
  ghost[BX] = -ghost[BX];
  const Vec8 f = hll_flux(ghost, u, kGamma, Dir::X);
  CHECK(f[RHO] == 0.0);
  CHECK(f[MY] == 0.0);
  CHECK(f[MZ] == 0.0);
  CHECK(f[EN] == 0.0);
  CHECK(f[BY] == 0.0);
  CHECK(f[BZ] == 0.0);
  // momentum flux reduces to a pure pressure push
  CHECK(f[MX] > 0.0);
}

TEST_CASE("degenerate wave fan requires identical inputs") {
  // equal states with zero speeds only arise for ul == ur, handled quietly
  std::mt19937_64 rng(23);
  const Vec8 u = random_state(rng);
  WaveSpeeds ws;
  const Vec8 f = hll_flux(u, u, kGamma, Dir::X, ws);
  CHECK(ws.sl <= 0.0);
  CHECK(ws.sr >= 0.0);
  CHECK(std::isfinite(f[RHO]));
}

TEST_CASE("vertex electric field collapses to 1d along invariant data") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 50; ++it) {
    const Vec8 ul = random_state(rng), ur = random_state(rng);
    // vertically invariant: lower and upper states agree in each column
    const double ez = vertex_ez(ul, ur, ul, ur, kGamma);
    const Vec8 f = hll_flux(ul, ur, kGamma, Dir::X);
    CHECK(ez == doctest::Approx(-f[BY]).epsilon(1e-12).scale(1.0));
    // horizontally invariant data reduces to the y-pair field
    const double ez2 = vertex_ez(ul, ul, ur, ur, kGamma);
    const Vec8 g = hll_flux(ul, ur, kGamma, Dir::Y);
    CHECK(ez2 == doctest::Approx(g[BX]).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("vertex electric field vanishes exactly on a mirror wall") {
  Prim w;
  w.rho = 1.1;
  w.ux = 0.37;
  w.uy = 0.56;
  w.uz = -0.21;
  w.p = 1.9;
  w.Bx = 0.43;
  w.By = -0.3;
  w.Bz = 0.12;
  const Vec8 dn = prim_to_cons(w, kGamma);
  Vec8 up = dn;  // mirror across a horizontal wall: negate my and By
  up[MY] = -up[MY];
  up[BY] = -up[BY];
  // wall through the vertex: both x-columns see mirrored partners
  Prim w2 = w;
  w2.rho = 1.4;
  w2.ux = -0.6;
  const Vec8 dn2 = prim_to_cons(w2, kGamma);
  Vec8 up2 = dn2;
  up2[MY] = -up2[MY];
  up2[BY] = -up2[BY];
  CHECK(vertex_ez(dn, dn2, up, up2, kGamma) == 0.0);
}

TEST_CASE("pointwise electric field") {
  Prim w;
  w.rho = 2.0;
  w.ux = 0.3;
  w.uy = -0.8;
  w.uz = 0.0;
  w.p = 1.0;
  w.Bx = 0.5;
  w.By = 0.25;
  w.Bz = 0.0;
  const Vec8 u = prim_to_cons(w, kGamma);
  // -Ez = ux*By - uy*Bx
  CHECK(ez_point(u) ==
        doctest::Approx(-(w.ux * w.By - w.uy * w.Bx)).epsilon(1e-14));
}
