// temporary exploration, not part of the build
#include <chrono>
#include <cstdio>
#include "juliadim/dimension.hpp"

using namespace juliadim;

static void counts(const MembershipRaster& r) {
  const int res = r.resolution;
  for (int s = 4; s * 16 <= res; s *= 2) {
    const int nb = res / s;
    std::size_t count = 0;
    for (int by = 0; by < nb; ++by)
      for (int bx = 0; bx < nb; ++bx) {
        bool hit = false;
        for (int iy = by * s; iy < (by + 1) * s && !hit; ++iy)
          for (int ix = bx * s; ix < (bx + 1) * s; ++ix)
            if (r.bit(ix, iy)) { hit = true; break; }
        count += hit;
      }
    std::printf("  s=%3d N=%zu  logN/log(res/s)=%.4f\n", s, count,
                std::log(double(count)) / std::log(double(res) / s));
  }
}

int main() {
  {
    auto f = FamilyInstance::cubic(cplx(0.0), cplx(0.0));
    auto r = julia_membership_raster(f, 2048, 200, JuliaProxy::BoundaryBand, cplx(0.0), 1.6, 1);
    auto est = box_dimension(r);
    std::printf("circle 2048: bits=%zu dim=%.4f\n", r.popcount(), est->value);
    counts(r);
  }
  for (double b : {2.0, 3.0, 4.0, 6.0}) {
    auto f = FamilyInstance::cubic(cplx(0.0), cplx(b, 0.0));
    auto t0 = std::chrono::steady_clock::now();
    auto r = julia_membership_raster(f, 4096, 400, JuliaProxy::BoundaryBand, cplx(0.0), 0.0, 1);
    auto est = box_dimension(r);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    auto bs = build_branch_system(f);
    double pv = -1;
    if (bs.status == BranchSystemStatus::Ok) {
      auto pr = pressure_dimension(bs.system, 6);
      pv = pr.estimate.value;
    }
    std::printf("b=%g: bits=%zu box=%.4f pressure=%.4f gap=%.4f (%.0f ms)\n", b, r.popcount(),
                est ? est->value : -1.0, pv, est ? std::abs(est->value - pv) : 9.0, ms);
    counts(r);
  }
  return 0;
}
