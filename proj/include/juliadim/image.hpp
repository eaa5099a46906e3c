#pragma once

// Binary portable pixmap output (P6, 8-bit RGB) with atomic writes, plus the
// fixed palettes used by the renderers. Byte-exact for fixed inputs.

#include <array>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "juliadim/core.hpp"
#include "juliadim/dimension.hpp"
#include "juliadim/slice.hpp"

namespace juliadim {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
};

struct Image {
  int width = 0, height = 0;
  std::vector<Rgb> px;

  Image() = default;
  Image(int w, int h) : width(w), height(h), px(std::size_t(w) * h) {}
  Rgb& at(int x, int y) { return px[std::size_t(y) * width + x]; }
  const Rgb& at(int x, int y) const { return px[std::size_t(y) * width + x]; }

  std::vector<std::uint8_t> ppm_bytes() const {
    std::string header = "P6\n" + std::to_string(width) + " " + std::to_string(height) +
                         "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + px.size() * 3);
    for (const Rgb& p : px) {
      out.push_back(p.r);
      out.push_back(p.g);
      out.push_back(p.b);
    }
    return out;
  }
};

// temp file + rename so partially written outputs are never observed
inline void write_file_atomic(const std::string& path,
                              const std::vector<std::uint8_t>& bytes) {
  const std::string tmp = path + ".tmp";
  std::FILE* fp = std::fopen(tmp.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open for writing: " + tmp);
  if (!bytes.empty() && std::fwrite(bytes.data(), 1, bytes.size(), fp) != bytes.size()) {
    std::fclose(fp);
    throw std::runtime_error("short write: " + tmp);
  }
  std::fclose(fp);
  std::filesystem::rename(tmp, path);
}

inline void write_ppm(const std::string& path, const Image& img) {
  write_file_atomic(path, img.ppm_bytes());
}

// escape-time ramp: fixed integer cycling gradient
inline Rgb escape_shade(int iter) {
  static const std::array<Rgb, 6> ramp = {{{20, 40, 96},
                                           {40, 96, 160},
                                           {96, 160, 208},
                                           {208, 224, 160},
                                           {224, 160, 64},
                                           {128, 64, 32}}};
  const int k = iter < 0 ? 0 : iter;
  const Rgb& lo = ramp[std::size_t(k % 6)];
  const Rgb& hi = ramp[std::size_t((k + 1) % 6)];
  // quarter-step blend inside the cycle keeps bands visible but soft
  const int t = (k / 6) % 4;
  auto mix = [t](int x, int y) { return std::uint8_t(x + (y - x) * t / 4); };
  return {mix(lo.r, hi.r), mix(lo.g, hi.g), mix(lo.b, hi.b)};
}

// Slice raster palette: escape shading for escaping cells, flat colors for
// bounded/unresolved classes, distinct marks for out-of-slice and failures.
inline Rgb slice_cell_color(const SlicePoint& c) {
  if (c.status == SliceStatus::NotInSlice) return {64, 64, 64};
  if (c.status != SliceStatus::Ok) return {255, 0, 255};
  switch (c.cls) {
    case PointClass::CoCriticalEscapes: return escape_shade(c.escape_iter);
    case PointClass::BoundedWithAttractor: {
      static const std::array<Rgb, 6> per = {{{0, 0, 0},
                                              {160, 0, 0},
                                              {0, 120, 0},
                                              {0, 0, 160},
                                              {140, 100, 0},
                                              {100, 0, 120}}};
      return per[std::size_t((c.cycle.period - 1) % 6)];
    }
    case PointClass::BoundedUnresolved: return {255, 255, 255};
    case PointClass::Unclassified: return {128, 128, 128};
  }
  return {128, 128, 128};
}

inline Image slice_image(const SliceRaster& r) {
  Image img(r.width, r.height);
  for (int iy = 0; iy < r.height; ++iy)
    for (int ix = 0; ix < r.width; ++ix) img.at(ix, iy) = slice_cell_color(r.at(ix, iy));
  return img;
}

// Julia/filled-set escape image: iterate every pixel, flat black bounded set,
// dark blue for inner-captured McMullen pixels.
inline Image julia_image(const FamilyInstance& f, int width, int height, cplx center,
                         double half_width, int depth, int threads = 1) {
  Image img(width, height);
  const double R = escape_region(f).radius;
  const bool mc = !f.is_polynomial();
  const double rho = mc ? mcmullen_inner_radius(f, R) : 0.0;
  const double hy = half_width * double(height) / double(width);
  parallel_rows(height, threads, [&](int iy) {
    for (int ix = 0; ix < width; ++ix) {
      const double x = center.real() + half_width * (2.0 * (ix + 0.5) / width - 1.0);
      const double y = center.imag() + hy * (1.0 - 2.0 * (iy + 0.5) / height);
      cplx z(x, y);
      Rgb col{0, 0, 0};
      for (int k = 0; k < depth; ++k) {
        const double m = std::abs(z);
        if (mc && k > 0 && m < rho) {
          col = {16, 16, 80};
          break;
        }
        if (m > R) {
          col = escape_shade(k);
          break;
        }
        if (mc && z == cplx(0.0)) {
          col = {16, 16, 80};
          break;
        }
        z = f.eval(z);
        if (!finite(z)) {
          col = escape_shade(k);
          break;
        }
      }
      img.at(ix, iy) = col;
    }
  });
  return img;
}

inline Image membership_image(const MembershipRaster& r) {
  Image img(r.resolution, r.resolution);
  for (int iy = 0; iy < r.resolution; ++iy)
    for (int ix = 0; ix < r.resolution; ++ix)
      img.at(ix, iy) = r.bit(ix, iy) ? Rgb{255, 255, 255} : Rgb{0, 0, 0};
  return img;
}

}  // namespace juliadim
