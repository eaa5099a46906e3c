// temporary exploration, not part of the build
#include <chrono>
#include <cstdio>
#include "juliadim/hunt.hpp"

using namespace juliadim;
using clk = std::chrono::steady_clock;

int main(int argc, char** argv) {
  const int depth = argc > 1 ? atoi(argv[1]) : 2;
  auto spec = SliceSpec::make(cplx(2.0, 0.0));
  auto omega = OmegaSpec::make(0, 1, 10, 10, 1.0);
  HuntBudget budget;
  budget.raster_resolution = 96;
  budget.dim_resolution = 1024;

  SlicePoint hint = anchor_solve(spec, cplx(-1.2, 0.0));
  SliceWindow region{cplx(-1.2095, 0.0), 0.018};

  auto t0 = clk::now();
  auto rep = run_hunt(spec, omega, depth, budget, region, &hint);
  double sec = std::chrono::duration<double>(clk::now() - t0).count();
  std::printf("hunt depth %d: completed=%d in %.1f s%s%s\n", depth, rep.completed, sec,
              rep.completed ? "" : " FAILURE: ", rep.completed ? "" : rep.failure.c_str());
  for (const auto& st : rep.stages) {
    std::printf(
        "stage %d: parab a=(%.8f,%.8f) |m-1|=%.2e alpha=%.6g omega=%d tuned a=(%.8f,%.8f)\n"
        "         disk c=(%.8f,%.8f) r=%.3e nest=%d box=%.3f(unc %.3f) pressure=%s\n",
        st.index, st.parabolic_point.a.real(), st.parabolic_point.a.imag(),
        std::abs(st.parabolic_cycle.multiplier - 1.0), st.alpha, st.alpha_in_omega,
        st.tuned_point.a.real(), st.tuned_point.a.imag(), st.disk_center.real(),
        st.disk_center.imag(), st.disk_radius, st.nesting_ok,
        st.box_estimate ? st.box_estimate->value : -1.0,
        st.box_estimate ? st.box_estimate->uncertainty : -1.0,
        st.pressure_estimate ? "yes" : st.pressure_note.c_str());
  }
  if (rep.completed)
    std::printf("final (%.8f,%.8f) verdict=%d\n", rep.final_a.real(), rep.final_a.imag(),
                int(rep.final_verdict));
  return 0;
}
