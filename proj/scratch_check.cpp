// temporary smoke test, not part of the build
#include <cstdio>
#include "juliadim/families.hpp"
#include "juliadim/potential.hpp"

using namespace juliadim;

int main() {
  // cubic coefficients
  auto c3 = expand_q_coefficients(3, cplx(2.0, 1.0));
  std::printf("d=3 coeffs: ");
  for (auto& c : c3) std::printf("(%g,%g) ", c.real(), c.imag());
  std::printf("\n");
  auto c4 = expand_q_coefficients(4, cplx(1.0, 0.0));
  std::printf("d=4 coeffs: ");
  for (auto& c : c4) std::printf("(%g,%g) ", c.real(), c.imag());
  std::printf("\n");

  auto f0 = FamilyInstance::cubic(cplx(0.0), cplx(0.0));
  auto p = potential(f0, cplx(std::exp(2.0), 0.0));
  std::printf("h(e^2) for z^3 = %.15f (escaped=%d iters=%d)\n", p.value, p.escaped,
              p.iterations_used);
  auto bo = boettcher(f0, cplx(5.0, 0.0));
  std::printf("phi(5) for z^3 = (%g, %g) residual=%g status=%d\n", bo.value.real(),
              bo.value.imag(), bo.residual, int(bo.status));

  auto f1 = FamilyInstance::cubic(cplx(-1.2, 0.0), cplx(0.0));
  auto zr = zeta_of(f1);
  std::printf("zeta(a=-1.2,b=0): status=%d zeta=(%.12f,%.12f) h_marked=%g h_other=%g\n",
              int(zr.status), zr.zeta.real(), zr.zeta.imag(), zr.h_marked, zr.h_other);
  // functional check: zeta^3 vs phi(f(cocrit))
  auto cc = f1.slice_marked_point();
  auto b2 = boettcher(f1, f1.eval(cc));
  cplx z3 = zr.zeta * zr.zeta * zr.zeta;
  std::printf("zeta^3=(%.12f,%.12f) phi(f(cc))=(%.12f,%.12f)\n", z3.real(), z3.imag(),
              b2.value.real(), b2.value.imag());
  std::printf("|zeta| = %.15f  exp(h_marked) = %.15f\n", std::abs(zr.zeta),
              std::exp(zr.h_marked));

  // random-ish cubic with complex a
  auto f2 = FamilyInstance::cubic(cplx(-1.1, 0.35), cplx(0.2, -0.1));
  auto zr2 = zeta_of(f2);
  auto cc2 = f2.slice_marked_point();
  auto b22 = boettcher(f2, f2.eval(cc2));
  cplx z32 = zr2.zeta * zr2.zeta * zr2.zeta;
  std::printf("f2: status=%d zeta=(%.12f,%.12f)\n", int(zr2.status), zr2.zeta.real(),
              zr2.zeta.imag());
  std::printf("  zeta^3=(%.10f,%.10f) phi(f(cc))=(%.10f,%.10f) resid=%.3g\n", z32.real(),
              z32.imag(), b22.value.real(), b22.value.imag(),
              std::abs(z32 - b22.value) / std::abs(b22.value));

  // functional equation sweep
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    double x = -3.0 + 6.0 * (i % 20) / 19.0, y = -3.0 + 6.0 * (i / 20) / 9.0;
    cplx z(x, y);
    auto pz = potential(f2, z);
    if (!pz.escaped) continue;
    auto pf = potential(f2, f2.eval(z));
    double err = std::abs(pf.value - 3.0 * pz.value);
    if (err > 1e-9 * std::max(1.0, pz.value)) ++bad;
  }
  std::printf("functional-eq violations: %d\n", bad);

  // McMullen
  auto fm = FamilyInstance::mcmullen(2, cplx(0.1, 0.0), cplx(3.0, 0.0));
  auto zm = zeta_of(fm);
  std::printf("mcmullen zeta: status=%d zeta=(%g,%g) h+=%g h-=%g\n", int(zm.status),
              zm.zeta.real(), zm.zeta.imag(), zm.h_marked, zm.h_other);
  return 0;
}
