// temporary benchmark, not part of the build
#include <chrono>
#include <cstdio>
#include "juliadim/families.hpp"
#include "juliadim/potential.hpp"

using namespace juliadim;
using clk = std::chrono::steady_clock;

int main() {
  auto t0 = clk::now();
  int n = 0;
  cplx acc = 0;
  for (int i = 0; i < 2000; ++i) {
    double x = -1.4 + 0.6 * (i % 50) / 49.0;
    double y = -0.3 + 0.6 * (i / 50) / 39.0;
    auto f = FamilyInstance::cubic(cplx(x, y), cplx(0.13, 0.07));
    auto z = zeta_of(f);
    if (z.status == ZetaStatus::Ok || z.status == ZetaStatus::NotInSlice) {
      acc += z.zeta;
      ++n;
    }
  }
  auto t1 = clk::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  std::printf("%d zeta evals in %.1f ms (%.3f ms each), acc=(%g,%g)\n", n, ms, ms / 2000,
              acc.real(), acc.imag());
  return 0;
}
