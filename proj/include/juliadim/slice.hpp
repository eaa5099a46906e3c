#pragma once

// Numerical coordinates on the parameter slice: for a fixed zeta outside the
// closed unit disk, solve the constraint zeta_of(a, b) = zeta for b with a as
// the free coordinate, classify the bounded-side critical orbit, rasterize
// windows, and locate/tune indifferent cycles.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "juliadim/core.hpp"
#include "juliadim/families.hpp"
#include "juliadim/potential.hpp"
#include "juliadim/raster.hpp"

namespace juliadim {

struct SliceSpec {
  cplx zeta;
  FamilyKind kind = FamilyKind::Cubic;
  int degree = 3;

  static SliceSpec make(cplx zeta, FamilyKind kind = FamilyKind::Cubic, int degree = 3) {
    if (!(std::abs(zeta) > 1.0)) throw std::invalid_argument("SliceSpec: |zeta| must exceed 1");
    if (kind == FamilyKind::McMullen && degree < 2)
      throw std::invalid_argument("SliceSpec: McMullen degree must be >= 2");
    if (kind != FamilyKind::McMullen && degree < 3)
      throw std::invalid_argument("SliceSpec: polynomial degree must be >= 3");
    return {zeta, kind, degree};
  }

  FamilyInstance instance(cplx a, cplx b) const {
    switch (kind) {
      case FamilyKind::Cubic: return FamilyInstance::cubic(a, b);
      case FamilyKind::MonicCenteredDegreeD: return FamilyInstance::monic_centered(degree, a, b);
      case FamilyKind::McMullen: return FamilyInstance::mcmullen(degree, a, b);
    }
    throw std::logic_error("SliceSpec: bad kind");
  }
};

enum class SliceStatus : std::uint8_t {
  Ok,
  NoConverge,   // Newton failed within the step budget
  NotInSlice,   // converged but h_other >= h_marked at the solution
  SeedInvalid,  // zeta undefined at every probe around the seed
  Unsolved,     // placeholder for untouched raster cells
};

enum class PointClass : std::uint8_t {
  Unclassified,
  CoCriticalEscapes,
  BoundedWithAttractor,
  BoundedUnresolved,
};

struct CycleRecord {
  int period = 0;
  cplx representative{};
  cplx multiplier{};
};

struct SlicePoint {
  cplx a{}, b{};
  double residual = 0.0;
  SliceStatus status = SliceStatus::Unsolved;
  PointClass cls = PointClass::Unclassified;
  int escape_iter = -1;   // escape iteration of the bounded-side orbit
  CycleRecord cycle{};    // set for BoundedWithAttractor
};

namespace detail {

struct ZetaEval {
  bool usable = false;  // marked orbit escaped and zeta finite
  bool in_slice = false;
  cplx zeta{};
};

inline ZetaEval eval_zeta(const SliceSpec& spec, cplx a, cplx b) {
  ZetaEval out;
  if (!finite(a) || !finite(b)) return out;
  if (spec.kind == FamilyKind::McMullen && (a == cplx(0.0) || b == cplx(0.0))) return out;
  if (spec.kind != FamilyKind::McMullen && a == cplx(0.0)) return out;
  const ZetaResult zr = zeta_of(spec.instance(a, b));
  if (zr.status == ZetaStatus::Ok || zr.status == ZetaStatus::NotInSlice) {
    out.usable = true;
    out.in_slice = zr.status == ZetaStatus::Ok;
    out.zeta = zr.zeta;
  }
  return out;
}

}  // namespace detail

// Damped Newton on b -> zeta_of(a, b) - zeta, derivative by central finite
// difference. Failures are recorded in the status, never thrown.
inline SlicePoint solve_slice(const SliceSpec& spec, cplx a, cplx b_seed) {
  SlicePoint pt;
  pt.a = a;
  pt.b = b_seed;

  detail::ZetaEval cur = detail::eval_zeta(spec, a, b_seed);
  if (!cur.usable) {
    pt.status = SliceStatus::SeedInvalid;
    return pt;
  }
  cplx b = b_seed;
  cplx g = cur.zeta - spec.zeta;
  for (int it = 0; it < tol::slice_newton_steps; ++it) {
    if (std::abs(g) <= tol::slice_residual) {
      pt.b = b;
      pt.residual = std::abs(g);
      pt.status = cur.in_slice ? SliceStatus::Ok : SliceStatus::NotInSlice;
      return pt;
    }
    const double d = 1e-6 * (1.0 + std::abs(b));
    const detail::ZetaEval zp = detail::eval_zeta(spec, a, b + d);
    const detail::ZetaEval zm = detail::eval_zeta(spec, a, b - d);
    cplx deriv;
    if (zp.usable && zm.usable) {
      deriv = (zp.zeta - zm.zeta) / (2.0 * d);
    } else if (zp.usable) {
      deriv = (zp.zeta - cur.zeta) / d;
    } else if (zm.usable) {
      deriv = (cur.zeta - zm.zeta) / d;
    } else {
      pt.status = SliceStatus::NoConverge;
      pt.b = b;
      pt.residual = std::abs(g);
      return pt;
    }
    if (deriv == cplx(0.0) || !finite(deriv)) {
      pt.status = SliceStatus::NoConverge;
      pt.b = b;
      pt.residual = std::abs(g);
      return pt;
    }
    const cplx step = -g / deriv;
    double lam = 1.0;
    bool moved = false;
    for (int h = 0; h < 10; ++h) {
      const cplx bt = b + lam * step;
      const detail::ZetaEval zt = detail::eval_zeta(spec, a, bt);
      if (zt.usable && std::abs(zt.zeta - spec.zeta) < std::abs(g)) {
        b = bt;
        cur = zt;
        g = zt.zeta - spec.zeta;
        moved = true;
        break;
      }
      lam *= 0.5;
    }
    if (!moved) {
      pt.status = SliceStatus::NoConverge;
      pt.b = b;
      pt.residual = std::abs(g);
      return pt;
    }
  }
  pt.b = b;
  pt.residual = std::abs(g);
  pt.status = std::abs(g) <= tol::slice_residual
                  ? (cur.in_slice ? SliceStatus::Ok : SliceStatus::NotInSlice)
                  : SliceStatus::NoConverge;
  return pt;
}

namespace detail {

inline cplx orbit_multiplier(const FamilyInstance& f, cplx w, int period) {
  cplx m = 1.0;
  cplx x = w;
  for (int i = 0; i < period; ++i) {
    m *= f.eval_deriv(x);
    x = f.eval(x);
  }
  return m;
}

inline cplx orbit_point(const FamilyInstance& f, cplx w, int period) {
  cplx x = w;
  for (int i = 0; i < period; ++i) x = f.eval(x);
  return x;
}

// Newton-polish a periodic point of f^period starting from w.
inline bool polish_cycle(const FamilyInstance& f, int period, cplx& w) {
  for (int it = 0; it < 60; ++it) {
    const cplx fw = orbit_point(f, w, period);
    const cplx err = fw - w;
    if (std::abs(err) <= tol::cycle_polish * (1.0 + std::abs(w))) return true;
    const cplx dfw = orbit_multiplier(f, w, period) - 1.0;
    if (dfw == cplx(0.0) || !finite(dfw)) return false;
    const cplx next = w - err / dfw;
    if (!finite(next)) return false;
    w = next;
  }
  return false;
}

}  // namespace detail

// Iterate the bounded-side critical orbit: escape -> CoCriticalEscapes with
// the escape iteration recorded; otherwise scan for a near-return, polish the
// cycle, and report an attractor when |multiplier| < 1. Anything else stays
// BoundedUnresolved (an honest verdict, not an error).
inline PointClass classify(const SliceSpec& spec, SlicePoint& pt, int max_iter) {
  const FamilyInstance f = spec.instance(pt.a, pt.b);
  const double R = escape_region(f).radius;
  const bool mc = !f.is_polynomial();
  const double rho = mc ? mcmullen_inner_radius(f, R) : 0.0;

  cplx w = f.bounded_candidate();
  for (int k = 0; k <= max_iter; ++k) {
    const double m = std::abs(w);
    if (m > R || (mc && k > 0 && m < rho)) {
      pt.cls = PointClass::CoCriticalEscapes;
      pt.escape_iter = k;
      return pt.cls;
    }
    if (k == max_iter) break;
    w = f.eval(w);
  }

  // bounded through max_iter; look for an attracting cycle near the tail
  pt.cls = PointClass::BoundedUnresolved;
  cplx tail = w;
  int cand = 0;
  {
    cplx x = tail;
    for (int p = 1; p <= tol::cycle_max_period; ++p) {
      x = f.eval(x);
      if (std::abs(x) > R) return pt.cls;
      if (std::abs(x - tail) < tol::cycle_near_return * (1.0 + std::abs(tail))) {
        cand = p;
        break;
      }
    }
  }
  if (cand == 0) return pt.cls;
  cplx rep = tail;
  if (!detail::polish_cycle(f, cand, rep)) return pt.cls;
  // minimal period among divisors
  int period = cand;
  for (int d = 1; d < cand; ++d) {
    if (cand % d != 0) continue;
    if (std::abs(detail::orbit_point(f, rep, d) - rep) <=
        tol::cycle_polish * (1.0 + std::abs(rep))) {
      period = d;
      break;
    }
  }
  const cplx mult = detail::orbit_multiplier(f, rep, period);
  if (std::abs(mult) < 1.0) {
    pt.cls = PointClass::BoundedWithAttractor;
    pt.cycle = {period, rep, mult};
  }
  return pt.cls;
}

struct SliceWindow {
  cplx center{};
  double half_width = 0.0;
};

struct SliceRaster {
  int width = 0, height = 0;
  SliceWindow window{};
  std::vector<SlicePoint> cells;

  cplx a_at(int ix, int iy) const {
    if (width == 1 && height == 1) return window.center;
    const double hx = window.half_width;
    const double hy = window.half_width * double(height) / double(width);
    const double x = window.center.real() + hx * (2.0 * (ix + 0.5) / width - 1.0);
    const double y = window.center.imag() + hy * (1.0 - 2.0 * (iy + 0.5) / height);
    return {x, y};
  }
  const SlicePoint& at(int ix, int iy) const { return cells[std::size_t(iy) * width + ix]; }
  SlicePoint& at(int ix, int iy) { return cells[std::size_t(iy) * width + ix]; }
};

// Solve b at an arbitrary a with no nearby seed: pick a base parameter with a
// marked orbit that escapes at one of a fixed list of probe b values, walk
// zeta to the target along a log-linear arc, then walk a to the target.
inline SlicePoint anchor_solve(const SliceSpec& spec, cplx a_target) {
  SlicePoint fail;
  fail.a = a_target;
  fail.status = SliceStatus::NoConverge;

  // base a: marked point roughly where phi ~ id would put it
  cplx a_base;
  if (spec.kind == FamilyKind::McMullen) {
    a_base = cplx(0.2, 0.0);
  } else {
    a_base = -spec.zeta * (1.3 / double(spec.degree - 1));
  }
  const cplx probes[] = {cplx(0.05, 0.02), cplx(0.0),   cplx(0.5, 0.1), cplx(-0.4, 0.3),
                         cplx(1.0, 0.0),   cplx(0.0, 1.0), cplx(3.0, 0.0)};
  cplx b;
  cplx zeta0;
  bool seeded = false;
  for (const cplx& pb : probes) {
    cplx probe_b = pb;
    if (spec.kind == FamilyKind::McMullen && probe_b == cplx(0.0)) continue;
    const detail::ZetaEval ze = detail::eval_zeta(spec, a_base, probe_b);
    if (ze.usable) {
      b = probe_b;
      zeta0 = ze.zeta;
      seeded = true;
      break;
    }
  }
  if (!seeded) return fail;

  // continuation in zeta (fixed a_base)
  const cplx l0 = std::log(zeta0), l1 = std::log(spec.zeta);
  double t = 0.0, dt = 0.5;
  while (t < 1.0) {
    const double tn = std::min(1.0, t + dt);
    const SliceSpec step{std::exp(l0 + (l1 - l0) * tn), spec.kind, spec.degree};
    const SlicePoint sp = solve_slice(step, a_base, b);
    if (sp.status == SliceStatus::Ok || sp.status == SliceStatus::NotInSlice) {
      b = sp.b;
      t = tn;
      dt = std::min(0.5, dt * 1.7);
    } else {
      dt *= 0.5;
      if (dt < 1e-6) return fail;
    }
  }

  // continuation in a (fixed zeta)
  t = 0.0;
  dt = 0.5;
  while (t < 1.0) {
    const double tn = std::min(1.0, t + dt);
    const cplx at = a_base + (a_target - a_base) * tn;
    const SlicePoint sp = solve_slice(spec, at, b);
    if (sp.status == SliceStatus::Ok || sp.status == SliceStatus::NotInSlice) {
      b = sp.b;
      t = tn;
      dt = std::min(0.5, dt * 1.7);
    } else {
      dt *= 0.5;
      if (dt < 1e-7) return fail;
    }
  }
  return solve_slice(spec, a_target, b);
}

// Walk b by continuation from (a_from, b_from) to a_to in adaptive segments.
inline SlicePoint continue_to(const SliceSpec& spec, cplx a_from, cplx b_from, cplx a_to) {
  double t = 0.0, dt = 1.0;
  cplx b = b_from;
  cplx a_cur = a_from;
  while (t < 1.0) {
    const double tn = std::min(1.0, t + dt);
    const cplx at = a_from + (a_to - a_from) * tn;
    const SlicePoint sp = solve_slice(spec, at, b);
    if (sp.status == SliceStatus::Ok || sp.status == SliceStatus::NotInSlice) {
      b = sp.b;
      a_cur = at;
      t = tn;
      dt = std::min(1.0, dt * 1.7);
      if (t >= 1.0) return sp;
    } else {
      dt *= 0.5;
      if (dt < 1e-5) return sp;
    }
  }
  return solve_slice(spec, a_cur, b);
}

// Raster fill: the center column is solved sequentially outward from the
// anchored center cell, each row then sweeps outward from its center cell
// (rows are independent, so the row-parallel schedule cannot change any
// byte), and a sequential post-pass reseeds failed cells from solved
// 4-neighbors. When an anchor is supplied the fill stays on its solution
// sheet; otherwise a sheet is picked automatically.
inline SliceRaster render_slice(const SliceSpec& spec, SliceWindow win, int width,
                                int height, int classify_iters, int threads = 1,
                                const SlicePoint* anchor_hint = nullptr) {
  if (width < 1 || height < 1) throw std::invalid_argument("render_slice: empty raster");
  SliceRaster r;
  r.width = width;
  r.height = height;
  r.window = win;
  r.cells.assign(std::size_t(width) * height, SlicePoint{});

  const int cx = width / 2;
  const int cy = height / 2;

  // anchor the center cell
  {
    const cplx a_c = r.a_at(cx, cy);
    SlicePoint sp;
    if (anchor_hint) {
      sp = continue_to(spec, anchor_hint->a, anchor_hint->b, a_c);
    } else {
      sp = anchor_solve(spec, a_c);
    }
    r.at(cx, cy) = sp;
  }

  // center column, outward from the center cell
  for (int dir = 0; dir < 2; ++dir) {
    bool have = r.at(cx, cy).status == SliceStatus::Ok ||
                r.at(cx, cy).status == SliceStatus::NotInSlice;
    cplx b = r.at(cx, cy).b;
    const int step = dir == 0 ? 1 : -1;
    for (int iy = cy + step; iy >= 0 && iy < height; iy += step) {
      const cplx a = r.a_at(cx, iy);
      SlicePoint sp = have ? solve_slice(spec, a, b)
                           : (anchor_hint ? continue_to(spec, anchor_hint->a, anchor_hint->b, a)
                                          : anchor_solve(spec, a));
      if (sp.status == SliceStatus::Ok || sp.status == SliceStatus::NotInSlice) {
        b = sp.b;
        have = true;
      }
      r.at(cx, iy) = sp;
    }
  }

  parallel_rows(height, threads, [&](int iy) {
    const SlicePoint& mid = r.at(cx, iy);
    const bool mid_ok =
        mid.status == SliceStatus::Ok || mid.status == SliceStatus::NotInSlice;
    // rightward then leftward, seeding from the last solved cell
    for (int dir = 0; dir < 2; ++dir) {
      bool have = mid_ok;
      cplx b = mid.b;
      const int step = dir == 0 ? 1 : -1;
      for (int ix = cx + step; ix >= 0 && ix < width; ix += step) {
        const cplx a = r.a_at(ix, iy);
        SlicePoint sp;
        if (have) {
          sp = solve_slice(spec, a, b);
        } else {
          sp.a = a;
          sp.status = SliceStatus::Unsolved;
        }
        if (sp.status == SliceStatus::Ok || sp.status == SliceStatus::NotInSlice) {
          b = sp.b;
          have = true;
        }
        r.at(ix, iy) = sp;
      }
    }
  });

  // sequential neighbor-reseed passes for leftover failures
  for (int pass = 0; pass < 2; ++pass) {
    for (int iy = 0; iy < height; ++iy) {
      for (int ix = 0; ix < width; ++ix) {
        SlicePoint& cell = r.at(ix, iy);
        if (cell.status == SliceStatus::Ok || cell.status == SliceStatus::NotInSlice)
          continue;
        const int nx[4] = {ix - 1, ix + 1, ix, ix};
        const int ny[4] = {iy, iy, iy - 1, iy + 1};
        for (int k = 0; k < 4; ++k) {
          if (nx[k] < 0 || nx[k] >= width || ny[k] < 0 || ny[k] >= height) continue;
          const SlicePoint& nb = r.at(nx[k], ny[k]);
          if (nb.status != SliceStatus::Ok && nb.status != SliceStatus::NotInSlice) continue;
          const SlicePoint sp = solve_slice(spec, r.a_at(ix, iy), nb.b);
          if (sp.status == SliceStatus::Ok || sp.status == SliceStatus::NotInSlice) {
            cell = sp;
            break;
          }
        }
      }
    }
  }

  parallel_rows(height, threads, [&](int iy) {
    for (int ix = 0; ix < width; ++ix) {
      SlicePoint& cell = r.at(ix, iy);
      if (cell.status == SliceStatus::Ok) classify(spec, cell, classify_iters);
    }
  });
  return r;
}

struct ParabolicRoot {
  bool found = false;
  std::string failure;
  SlicePoint point{};
  CycleRecord cycle{};
};

namespace detail {

struct ExtState {
  cplx a, b, w;
};

// One damped Newton solve of F(a, w) = (f^p(w) - w, mult(a, w) - lambda) with
// b = b(a) maintained by the slice solver.
inline bool newton_multiplier(const SliceSpec& spec, int period, cplx lambda,
                              ExtState& st, double tolv, std::string* why) {
  auto resolve_b = [&](cplx a, cplx b_seed, cplx* b_out) {
    const SlicePoint sp = solve_slice(spec, a, b_seed);
    if (sp.status != SliceStatus::Ok && sp.status != SliceStatus::NotInSlice) return false;
    *b_out = sp.b;
    return true;
  };
  auto eval_F = [&](const ExtState& s, cplx* F1, cplx* F2) {
    const FamilyInstance f = spec.instance(s.a, s.b);
    *F1 = orbit_point(f, s.w, period) - s.w;
    *F2 = orbit_multiplier(f, s.w, period) - lambda;
  };

  cplx F1, F2;
  eval_F(st, &F1, &F2);
  for (int it = 0; it < 40; ++it) {
    const double fn = std::max(std::abs(F1), std::abs(F2));
    if (fn <= tolv) return true;

    const FamilyInstance f = spec.instance(st.a, st.b);
    const cplx mult = orbit_multiplier(f, st.w, period);
    const cplx F1w = mult - 1.0;
    const double dw = 1e-7 * (1.0 + std::abs(st.w));
    const cplx F2w = (orbit_multiplier(f, st.w + dw, period) -
                      orbit_multiplier(f, st.w - dw, period)) /
                     (2.0 * dw);
    const double da = 1e-7 * (1.0 + std::abs(st.a));
    cplx bp, bm;
    if (!resolve_b(st.a + da, st.b, &bp) || !resolve_b(st.a - da, st.b, &bm)) {
      if (why) *why = "slice solve failed during Jacobian";
      return false;
    }
    const FamilyInstance fp = spec.instance(st.a + da, bp);
    const FamilyInstance fm = spec.instance(st.a - da, bm);
    const cplx F1a = (orbit_point(fp, st.w, period) - orbit_point(fm, st.w, period)) / (2.0 * da);
    const cplx F2a = (orbit_multiplier(fp, st.w, period) - orbit_multiplier(fm, st.w, period)) /
                     (2.0 * da);

    const cplx det = F1a * F2w - F1w * F2a;
    if (det == cplx(0.0) || !finite(det)) {
      if (why) *why = "singular Jacobian";
      return false;
    }
    // condition number via singular values of the 2x2 complex Jacobian
    {
      const double g11 = std::norm(F1a) + std::norm(F2a);
      const double g22 = std::norm(F1w) + std::norm(F2w);
      const cplx g12 = std::conj(F1a) * F1w + std::conj(F2a) * F2w;
      const double tr = g11 + g22;
      const double dd = std::sqrt(std::max(0.0, (g11 - g22) * (g11 - g22) / 4.0 + std::norm(g12)));
      const double smax = std::sqrt(tr / 2.0 + dd);
      const double smin = std::sqrt(std::max(0.0, tr / 2.0 - dd));
      if (smin == 0.0 || smax / smin > 1e12) {
        if (why) *why = "ill-conditioned Jacobian";
        return false;
      }
    }
    const cplx da_step = -(F1 * F2w - F2 * F1w) / det;
    const cplx dw_step = -(F2 * F1a - F1 * F2a) / det;

    double lam = 1.0;
    bool moved = false;
    for (int h = 0; h < 9; ++h) {
      ExtState trial = st;
      trial.a = st.a + lam * da_step;
      trial.w = st.w + lam * dw_step;
      if (resolve_b(trial.a, st.b, &trial.b)) {
        cplx t1, t2;
        eval_F(trial, &t1, &t2);
        if (std::max(std::abs(t1), std::abs(t2)) < fn) {
          st = trial;
          F1 = t1;
          F2 = t2;
          moved = true;
          break;
        }
      }
      lam *= 0.5;
    }
    if (!moved) {
      if (why) *why = "no descent step";
      return false;
    }
  }
  if (why) *why = "Newton step budget exhausted";
  return false;
}

// Adaptive continuation to the target multiplier along a straight path.
inline bool continue_multiplier(const SliceSpec& spec, int period, cplx lambda0,
                                cplx lambda1, ExtState& st, double final_tol,
                                double stall, std::string* why) {
  double t = 0.0, dt = 0.5;
  while (t < 1.0) {
    const double tn = std::min(1.0, t + dt);
    const cplx lam = lambda0 + (lambda1 - lambda0) * tn;
    ExtState trial = st;
    const double tolv = tn >= 1.0 ? final_tol : std::max(final_tol, 1e-8);
    if (newton_multiplier(spec, period, lam, trial, tolv, why)) {
      st = trial;
      t = tn;
      dt = std::min(0.5, dt * 1.6);
    } else {
      dt *= 0.5;
      if (dt < stall) {
        if (why && why->empty()) *why = "continuation stalled";
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// Newton on the two-unknown system (cycle equation, multiplier equation) with
// target multiplier exp(2 pi i p/q), seeded from the raster cell whose
// attractor has the requested period and the closest multiplier.
inline ParabolicRoot find_parabolic_root(const SliceSpec& spec, const SliceRaster& raster,
                                         long p, long q, int period) {
  ParabolicRoot out;
  if (q < 1) {
    out.failure = "invalid rotation number";
    return out;
  }
  const cplx target = std::polar(1.0, kTwoPi * double(p) / double(q));
  const SlicePoint* seed = nullptr;
  for (const SlicePoint& c : raster.cells) {
    if (c.status != SliceStatus::Ok || c.cls != PointClass::BoundedWithAttractor) continue;
    if (c.cycle.period != period) continue;
    if (!seed || std::abs(c.cycle.multiplier - target) <
                     std::abs(seed->cycle.multiplier - target))
      seed = &c;
  }
  if (!seed) {
    out.failure = "no attracting cell of the requested period in the region";
    return out;
  }
  detail::ExtState st{seed->a, seed->b, seed->cycle.representative};
  std::string why;
  if (!detail::continue_multiplier(spec, period, seed->cycle.multiplier, target, st,
                                   tol::parabolic, 1e-8, &why)) {
    out.failure = why.empty() ? "continuation failed" : why;
    return out;
  }
  const SlicePoint sp = solve_slice(spec, st.a, st.b);
  if (sp.status != SliceStatus::Ok) {
    out.failure = "root left the slice";
    return out;
  }
  const FamilyInstance f = spec.instance(st.a, st.b);
  out.found = true;
  out.point = sp;
  out.cycle = {period, st.w, detail::orbit_multiplier(f, st.w, period)};
  return out;
}

// Continue the indifferent cycle from rotation number alpha_from to
// alpha_target (multiplier exp(2 pi i alpha)).
inline ParabolicRoot tune_multiplier(const SliceSpec& spec, const SlicePoint& seed_pt,
                                     const CycleRecord& seed_cyc, cplx alpha_from,
                                     cplx alpha_target) {
  ParabolicRoot out;
  detail::ExtState st{seed_pt.a, seed_pt.b, seed_cyc.representative};
  const cplx i2pi(0.0, kTwoPi);
  std::string why;
  // walk alpha linearly; the multiplier follows exp(2 pi i alpha)
  double t = 0.0, dt = alpha_from == alpha_target ? 1.0 : 0.25;
  while (t < 1.0) {
    const double tn = std::min(1.0, t + dt);
    const cplx alpha = alpha_from + (alpha_target - alpha_from) * tn;
    const cplx lam = std::exp(i2pi * alpha);
    detail::ExtState trial = st;
    const double tolv = tn >= 1.0 ? tol::parabolic : 1e-8;
    if (detail::newton_multiplier(spec, seed_cyc.period, lam, trial, tolv, &why)) {
      st = trial;
      t = tn;
      dt = std::min(0.25, dt * 1.6);
    } else {
      dt *= 0.5;
      if (dt < tol::tune_stall) {
        out.failure = why.empty() ? "tune stalled" : why;
        return out;
      }
    }
  }
  const SlicePoint sp = solve_slice(spec, st.a, st.b);
  if (sp.status != SliceStatus::Ok) {
    out.failure = "tuned parameter left the slice";
    return out;
  }
  const FamilyInstance f = spec.instance(st.a, st.b);
  out.found = true;
  out.point = sp;
  out.cycle = {seed_cyc.period, st.w, detail::orbit_multiplier(f, st.w, seed_cyc.period)};
  return out;
}

}  // namespace juliadim
