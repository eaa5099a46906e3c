// temporary exploration, not part of the build
#include <chrono>
#include <cstdio>
#include <vector>
#include "juliadim/dimension.hpp"

using namespace juliadim;

// fit over explicit sizes
static double fit(const MembershipRaster& r, int smin, int smax, double* resid) {
  const int res = r.resolution;
  std::vector<double> xs, ys;
  for (int s = smin; s <= smax; s *= 2) {
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
    if (!count) break;
    xs.push_back(std::log(double(res) / s));
    ys.push_back(std::log(double(count)));
  }
  int n = int(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) { sx += xs[i]; sy += ys[i]; sxx += xs[i]*xs[i]; sxy += xs[i]*ys[i]; }
  double det = n * sxx - sx * sx;
  double slope = (n * sxy - sx * sy) / det;
  double icept = (sy * sxx - sx * sxy) / det;
  double ss = 0;
  for (int i = 0; i < n; ++i) { double e = ys[i] - slope * xs[i] - icept; ss += e * e; }
  *resid = std::sqrt(ss / n);
  return slope;
}

int main() {
  {
    auto f = FamilyInstance::cubic(cplx(0.0), cplx(0.0));
    auto t0 = std::chrono::steady_clock::now();
    auto r = julia_membership_raster(f, 4096, 200, JuliaProxy::BoundaryBand, cplx(0.0), 0.0, 1);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    double res1, res2, res3;
    double d1 = fit(r, 4, 4096 / 16, &res1);
    double d2 = fit(r, 4, 4096 / 32, &res2);
    double d3 = fit(r, 2, 4096 / 64, &res3);
    std::printf("circle 4096 (hw=%.2f, %.0f s): [4..256]=%.4f(%.3f) [4..128]=%.4f(%.3f) [2..64]=%.4f(%.3f)\n",
                r.half_width, ms / 1000, d1, res1, d2, res2, d3, res3);
  }
  for (double b : {1.6, 2.0, 2.5}) {
    auto f = FamilyInstance::cubic(cplx(0.0), cplx(b, 0.0));
    auto r = julia_membership_raster(f, 4096, 400, JuliaProxy::BoundaryBand, cplx(0.0), 0.0, 1);
    auto bs = build_branch_system(f);
    double pv = -1;
    if (bs.status == BranchSystemStatus::Ok)
      pv = pressure_dimension(bs.system, 6).estimate.value;
    else
      std::printf("b=%g: branch FAILED %s\n", b, bs.reason.c_str());
    double res1, res2, res3;
    double d1 = fit(r, 4, 4096 / 16, &res1);
    double d2 = fit(r, 4, 4096 / 32, &res2);
    double d3 = fit(r, 2, 4096 / 64, &res3);
    std::printf("b=%.1f: bits=%zu press=%.4f [4..256]=%.4f gap %.3f | [4..128]=%.4f gap %.3f | [2..64]=%.4f gap %.3f\n",
                b, r.popcount(), pv, d1, std::abs(d1 - pv), d2, std::abs(d2 - pv), d3,
                std::abs(d3 - pv));
  }
  return 0;
}
