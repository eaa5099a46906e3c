// temporary exploration, not part of the build
#include <chrono>
#include <cstdio>
#include "juliadim/dimension.hpp"

using namespace juliadim;
using clk = std::chrono::steady_clock;

int main() {
  // synthetic IFS: 2 maps ratio 1/3 -> log2/log3
  {
    auto s = similarity_ifs({{cplx(1.0 / 3.0), cplx(0.0)}, {cplx(1.0 / 3.0), cplx(2.0 / 3.0)}});
    auto pr = pressure_dimension(s, 6);
    std::printf("ifs 2@1/3: status=%d value=%.8f (expect %.8f) unc=%.2e\n", int(pr.status),
                pr.estimate.value, std::log(2.0) / std::log(3.0), pr.estimate.uncertainty);
  }
  {
    auto s = similarity_ifs({{cplx(0.2), cplx(0.0)},
                             {cplx(0.2), cplx(0.4)},
                             {cplx(0.2), cplx(0.8)}});
    auto pr = pressure_dimension(s, 6);
    std::printf("ifs 3@1/5: status=%d value=%.8f (expect %.8f)\n", int(pr.status),
                pr.estimate.value, std::log(3.0) / std::log(5.0));
  }
  // branch systems for cubic a=0, b in {6,10,20,50}
  double prev = 3.0;
  for (double b : {6.0, 10.0, 20.0, 50.0}) {
    auto f = FamilyInstance::cubic(cplx(0.0), cplx(b, 0.0));
    auto t0 = clk::now();
    auto bs = build_branch_system(f);
    if (bs.status != BranchSystemStatus::Ok) {
      std::printf("b=%g: branch system FAILED: %s\n", b, bs.reason.c_str());
      continue;
    }
    auto pr = pressure_dimension(bs.system, 6);
    double ms = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
    std::printf("b=%g: dim=%.6f unc=%.2e sep=%.3f status=%d decreasing=%d (%.0f ms)\n", b,
                pr.estimate.value, pr.estimate.uncertainty, bs.system.separation_margin,
                int(pr.status), pr.estimate.value < prev, ms);
    prev = pr.estimate.value;
  }
  // bounded case must fail
  {
    auto f = FamilyInstance::cubic(cplx(0.5), cplx(-0.75, 0.0));
    auto bs = build_branch_system(f);
    std::printf("bounded cubic: status=%d reason=%s\n", int(bs.status), bs.reason.c_str());
  }
  // McMullen with both critical values escaping
  {
    auto f = FamilyInstance::mcmullen(2, cplx(0.1, 0.0), cplx(3.0, 0.0));
    auto bs = build_branch_system(f);
    if (bs.status == BranchSystemStatus::Ok) {
      auto pr = pressure_dimension(bs.system, 5);
      std::printf("mcmullen: branches=%d dim=%.6f status=%d\n", bs.system.branch_count,
                  pr.estimate.value, int(pr.status));
    } else {
      std::printf("mcmullen FAILED: %s\n", bs.reason.c_str());
    }
  }
  // box dimension: circle Julia set (a=0,b=0) at 1024 and 2048
  for (int res : {1024, 2048}) {
    auto f = FamilyInstance::cubic(cplx(0.0), cplx(0.0));
    auto t0 = clk::now();
    auto r = julia_membership_raster(f, res, 200, JuliaProxy::BoundaryBand, cplx(0.0), 1.6, 1);
    auto est = box_dimension(r);
    double ms = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
    if (est)
      std::printf("circle res=%d: bits=%zu dim=%.4f unc=%.4f residfit=%.4f scales=%d (%.0f ms)\n",
                  res, r.popcount(), est->value, est->uncertainty, est->fit_residual,
                  est->scales_used, ms);
    else
      std::printf("circle res=%d: no estimate\n", res);
  }
  // box vs pressure on b=10
  {
    auto f = FamilyInstance::cubic(cplx(0.0), cplx(10.0, 0.0));
    auto t0 = clk::now();
    auto r = julia_membership_raster(f, 2048, 300, JuliaProxy::BoundaryBand, cplx(0.0), 0.0, 1);
    auto est = box_dimension(r);
    double ms = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
    auto bs = build_branch_system(f);
    auto pr = pressure_dimension(bs.system, 6);
    if (est)
      std::printf("b=10: box=%.4f (unc %.3f, %.0f ms, bits=%zu, hw=%.2f) pressure=%.4f gap=%.4f\n",
                  est->value, est->uncertainty, ms, r.popcount(), r.half_width,
                  pr.estimate.value, std::abs(est->value - pr.estimate.value));
    else
      std::printf("b=10: box no estimate (bits=%zu)\n", r.popcount());
  }
  // area decay a=0,b=10
  {
    auto f = FamilyInstance::cubic(cplx(0.0), cplx(10.0, 0.0));
    std::vector<MembershipRaster> seq;
    for (int res : {512, 1024, 2048})
      seq.push_back(julia_membership_raster(f, res, 300, JuliaProxy::BoundaryBand,
                                            cplx(0.0), 0.0, 1));
    auto fr = area_decay_diagnostic(seq);
    std::printf("area decay b=10: %.6g %.6g %.6g\n", fr[0], fr[1], fr[2]);
  }
  return 0;
}
