// temporary exploration, not part of the build
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include "juliadim/slice.hpp"

using namespace juliadim;
using clk = std::chrono::steady_clock;

static void show(const SliceRaster& r) {
  for (int iy = 0; iy < r.height; ++iy) {
    for (int ix = 0; ix < r.width; ++ix) {
      const auto& c = r.at(ix, iy);
      char ch;
      if (c.status == SliceStatus::Ok) {
        ch = c.cls == PointClass::CoCriticalEscapes   ? '.'
             : c.cls == PointClass::BoundedWithAttractor ? '#'
                                                         : 'o';
      } else if (c.status == SliceStatus::NotInSlice) ch = '-';
      else ch = 'X';
      std::putchar(ch);
    }
    std::putchar('\n');
  }
}

int main(int argc, char** argv) {
  auto spec = SliceSpec::make(cplx(2.0, 0.0));
  int W = argc > 1 ? atoi(argv[1]) : 48;
  double cx = argc > 2 ? atof(argv[2]) : -1.2;
  double cy = argc > 3 ? atof(argv[3]) : 0.0;
  double hw = argc > 4 ? atof(argv[4]) : 0.25;

  // anchor on the bounded sheet found earlier
  SlicePoint hint = anchor_solve(spec, cplx(-1.2, 0.0));
  std::printf("hint: status=%d a=(%g,%g) b=(%g,%g)\n", int(hint.status), hint.a.real(),
              hint.a.imag(), hint.b.real(), hint.b.imag());

  auto t0 = clk::now();
  SliceWindow win{cplx(cx, cy), hw};
  auto r = render_slice(spec, win, W, W, 300, 1, &hint);
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
  std::printf("raster %dx%d in %.0f ms (%.1f ms/px): esc=%d att=%d unres=%d notin=%d fail=%d\n",
              W, W, ms, ms / (W * W), esc, att, unres, notin, fail);
  show(r);
  int shown = 0;
  for (int iy = 0; iy < r.height && shown < 8; ++iy)
    for (int ix = 0; ix < r.width && shown < 8; ++ix) {
      const auto& c = r.at(ix, iy);
      if (c.status == SliceStatus::Ok && c.cls == PointClass::BoundedWithAttractor) {
        std::printf("att a=(%.5f,%.5f) b=(%.5f,%.5f) per=%d mult=(%.3f,%.3f)\n", c.a.real(),
                    c.a.imag(), c.b.real(), c.b.imag(), c.cycle.period,
                    c.cycle.multiplier.real(), c.cycle.multiplier.imag());
        ++shown;
      }
    }
  return 0;
}
