// temporary exploration, not part of the build
#include <chrono>
#include <cstdio>
#include "juliadim/slice.hpp"

using namespace juliadim;
using clk = std::chrono::steady_clock;

int main() {
  auto spec = SliceSpec::make(cplx(2.0, 0.0));
  SlicePoint hint = anchor_solve(spec, cplx(-1.2, 0.0));
  SliceWindow win{cplx(-1.2095, 0.0), 0.018};
  auto t0 = clk::now();
  auto r = render_slice(spec, win, 40, 40, 300, 1, &hint);
  std::printf("raster: %.0f ms\n",
              std::chrono::duration<double, std::milli>(clk::now() - t0).count());

  for (auto pq : {std::pair<long, long>{0, 1}, std::pair<long, long>{1, 2}}) {
    t0 = clk::now();
    auto root = find_parabolic_root(spec, r, pq.first, pq.second, 1);
    double ms = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
    if (!root.found) {
      std::printf("(%ld/%ld): FAILED: %s (%.0f ms)\n", pq.first, pq.second,
                  root.failure.c_str(), ms);
      continue;
    }
    const cplx target = std::polar(1.0, kTwoPi * double(pq.first) / double(pq.second));
    std::printf("(%ld/%ld): a=(%.9f,%.9f) b=(%.9f,%.9f) mult err=%.2e resid=%.2e (%.0f ms)\n",
                pq.first, pq.second, root.point.a.real(), root.point.a.imag(),
                root.point.b.real(), root.point.b.imag(),
                std::abs(root.cycle.multiplier - target), root.point.residual, ms);

    // tune: alpha = p/q + 1e-3
    const double alpha0 = double(pq.first) / double(pq.second);
    for (double da : {1e-3, 0.02}) {
      t0 = clk::now();
      auto tuned = tune_multiplier(spec, root.point, root.cycle, alpha0, alpha0 + da);
      double ms2 = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
      if (!tuned.found) {
        std::printf("  tune +%g: FAILED: %s (%.0f ms)\n", da, tuned.failure.c_str(), ms2);
        continue;
      }
      const cplx lt = std::polar(1.0, kTwoPi * (alpha0 + da));
      std::printf("  tune +%g: a=(%.9f,%.9f) mult err=%.2e (%.0f ms)\n", da,
                  tuned.point.a.real(), tuned.point.a.imag(),
                  std::abs(tuned.cycle.multiplier - lt), ms2);
    }
    // identity case
    auto same = tune_multiplier(spec, root.point, root.cycle, alpha0, alpha0);
    std::printf("  tune identity: found=%d multerr=%.2e\n", same.found,
                same.found ? std::abs(same.cycle.multiplier - target) : -1.0);
  }
  return 0;
}
