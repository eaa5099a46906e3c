// temporary exploration, not part of the build
#include <chrono>
#include <cstdio>
#include "juliadim/slice.hpp"

using namespace juliadim;
using clk = std::chrono::steady_clock;

int main(int argc, char** argv) {
  auto spec = SliceSpec::make(cplx(2.0, 0.0));

  // round trip sanity
  {
    auto f = FamilyInstance::cubic(cplx(-1.1, 0.35), cplx(0.2, -0.1));
    auto zr = zeta_of(f);
    std::printf("fwd zeta status=%d zeta=(%f,%f)\n", int(zr.status), zr.zeta.real(),
                zr.zeta.imag());
    auto spec2 = SliceSpec::make(zr.zeta);
    auto sp = solve_slice(spec2, f.a, f.b + cplx(0.01, 0.0));
    std::printf("round trip: status=%d |db|=%.3g residual=%.3g\n", int(sp.status),
                std::abs(sp.b - f.b), sp.residual);
  }

  // anchor at various real a for zeta = 2
  for (double ax : {-1.5, -1.2, -1.0, -0.8, -0.6, -0.4, 0.4, 0.8, 1.2}) {
    auto t0 = clk::now();
    auto sp = anchor_solve(spec, cplx(ax, 0.0));
    double ms = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
    if (sp.status == SliceStatus::Ok || sp.status == SliceStatus::NotInSlice) {
      SlicePoint c = sp;
      classify(spec, c, 400);
      std::printf("a=%+.2f: status=%d b=(%.6f,%.6f) resid=%.2g cls=%d esc=%d per=%d |m|=%.3f (%.0f ms)\n",
                  ax, int(sp.status), sp.b.real(), sp.b.imag(), sp.residual, int(c.cls),
                  c.escape_iter, c.cycle.period, std::abs(c.cycle.multiplier), ms);
    } else {
      std::printf("a=%+.2f: FAILED status=%d (%.0f ms)\n", ax, int(sp.status), ms);
    }
  }

  // coarse raster over a candidate window
  auto t0 = clk::now();
  int W = argc > 1 ? atoi(argv[1]) : 48;
  SliceWindow win{cplx(-1.0, 0.0), 0.9};
  auto r = render_slice(spec, win, W, W, 300, 1);
  double ms = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
  int esc = 0, att = 0, unres = 0, fail = 0, notin = 0;
  for (auto& c : r.cells) {
    if (c.status == SliceStatus::Ok) {
      if (c.cls == PointClass::CoCriticalEscapes) ++esc;
      else if (c.cls == PointClass::BoundedWithAttractor) ++att;
      else ++unres;
    } else if (c.status == SliceStatus::NotInSlice) ++notin;
    else ++fail;
  }
  std::printf("raster %dx%d in %.0f ms: esc=%d att=%d unres=%d notin=%d fail=%d\n", W, W,
              ms, esc, att, unres, notin, fail);
  // visualize
  for (int iy = 0; iy < r.height; ++iy) {
    for (int ix = 0; ix < r.width; ++ix) {
      const auto& c = r.at(ix, iy);
      char ch = '?';
      if (c.status == SliceStatus::Ok) {
        ch = c.cls == PointClass::CoCriticalEscapes ? '.'
             : c.cls == PointClass::BoundedWithAttractor ? '#'
                                                         : 'o';
      } else if (c.status == SliceStatus::NotInSlice) ch = '-';
      else ch = 'X';
      std::putchar(ch);
    }
    std::putchar('\n');
  }
  // attractor cells: report a few
  int shown = 0;
  for (int iy = 0; iy < r.height && shown < 6; ++iy)
    for (int ix = 0; ix < r.width && shown < 6; ++ix) {
      const auto& c = r.at(ix, iy);
      if (c.status == SliceStatus::Ok && c.cls == PointClass::BoundedWithAttractor) {
        std::printf("att cell a=(%.4f,%.4f) b=(%.4f,%.4f) period=%d mult=(%.3f,%.3f)\n",
                    c.a.real(), c.a.imag(), c.b.real(), c.b.imag(), c.cycle.period,
                    c.cycle.multiplier.real(), c.cycle.multiplier.imag());
        ++shown;
      }
    }
  return 0;
}
