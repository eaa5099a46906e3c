#pragma once

// Escape-rate potential h(z) = lim deg^{-k} log+ |f^k(z)|, the Boettcher
// coordinate phi (tangent to the identity at infinity), and the slice
// invariant zeta = lim phi at the marked point.

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "juliadim/core.hpp"
#include "juliadim/families.hpp"

namespace juliadim {

struct EscapeRegion {
  double radius;
};

// Radius R with |f(z)| > |z| for all |z| >= R, so crossing R certifies escape.
// For a monic polynomial |f(z)| >= |z|^{d-2} (|z|^2 - S) with S = sum of the
// non-leading coefficient magnitudes, so |z|^2 >= 2 + 2S suffices. For the
// McMullen maps |f(z)| >= |z|^n - |a|^2/|z|^n - |b| and R = 2 + |b| + 2|a|
// already works. Both are combined with the cruder per-family formulas so the
// documented lower bound R >= 1 + degree*|a| + |b| always holds.
inline EscapeRegion escape_region(const FamilyInstance& f) {
  const double aa = std::abs(f.a);
  const double bb = std::abs(f.b);
  double r;
  if (f.is_polynomial()) {
    double s = 0.0;
    for (int i = 0; i < f.degree; ++i) s += std::abs(f.coeffs[i]);
    r = std::sqrt(2.0 + 2.0 * s);
    r = std::max(r, 1.0 + f.degree * aa * aa + aa + bb + 2.0);
  } else {
    r = 2.0 + bb + 2.0 * aa;
  }
  r = std::max(r, 1.0 + f.degree * aa + bb);
  return {std::max(r, 2.0)};
}

// McMullen orbits entering |z| < rho are treated as captured by the inner
// complementary disk and excluded from the potential, following the slice
// convention for this family.
inline double mcmullen_inner_radius(const FamilyInstance& f, double R) {
  const double aa = std::abs(f.a);
  return 0.5 * std::pow(aa * aa / R, 1.0 / double(f.degree));
}

struct PotentialRecord {
  double value = 0.0;
  bool escaped = false;
  int iterations_used = 0;
  double final_modulus = 0.0;
  bool inner_captured = false;
};

inline PotentialRecord potential(const FamilyInstance& f, cplx z,
                                 double tolv = tol::potential,
                                 int max_depth = tol::potential_max_depth) {
  const double R = escape_region(f).radius;
  const bool mc = !f.is_polynomial();
  const double rho = mc ? mcmullen_inner_radius(f, R) : 0.0;
  const double deg = double(f.map_degree());

  cplx w = z;
  double est = 0.0, prev = 0.0;
  bool have = false;
  double scale = 1.0;  // deg^{-k}
  for (int k = 0; k <= max_depth; ++k) {
    const double m = std::abs(w);
    if (mc && m < rho) return {0.0, false, k, m, true};
    if (m > R) {
      est = scale * std::log(m);
      if (have && std::abs(est - prev) < tolv) return {est, true, k, m, false};
      prev = est;
      have = true;
      // beyond this the remaining corrections are far below any tolerance
      if (m > 1e80) return {est, true, k, m, false};
    }
    if (k == max_depth) break;
    w = f.eval(w);
    scale /= deg;
  }
  if (have) return {est, true, max_depth, std::abs(w), false};
  return {0.0, false, max_depth, std::abs(w), false};
}

enum class BoettcherStatus {
  Ok,
  NotEscaping,
  InnerCaptured,
  BranchAmbiguous,
  NumericFailure,
};

namespace detail {

struct RayTrack {
  bool ok = false;
  cplx logphi{};
  BoettcherStatus fail = BoettcherStatus::Ok;
};

struct TermSet {
  std::vector<cplx> t;  // unwrapped log(f(w_j)/w_j^deg)
  cplx logphi{};
  bool ok = false;
  bool fail_not_escaping = false;
};

// Telescoping terms for the orbit of z*(1+s). When prev is given, each term is
// unwrapped against the previous path point and the step is rejected if any
// term moved by more than max_jump.
inline TermSet ray_terms(const FamilyInstance& f, cplx z, double s, double T,
                         const std::vector<cplx>* prev, double max_jump) {
  TermSet out;
  const double deg = double(f.map_degree());
  const cplx w0 = z * (1.0 + s);
  if (w0 == cplx(0.0) || !finite(w0)) return out;
  cplx acc = std::log(w0);
  cplx w = w0;
  double weight = 1.0 / deg;
  const int cap = 4096;
  for (int j = 0; j < cap; ++j) {
    if (w == cplx(0.0) || !finite(w)) return out;
    const cplx ratio = f.eval_ratio(w);
    if (ratio == cplx(0.0) || !finite(ratio)) return out;
    cplx t = std::log(ratio);
    if (prev && static_cast<std::size_t>(j) < prev->size()) {
      const double turns = std::round(((*prev)[j].imag() - t.imag()) / kTwoPi);
      t += cplx(0.0, kTwoPi * turns);
      if (std::abs(t - (*prev)[j]) > max_jump) return out;
    }
    out.t.push_back(t);
    acc += weight * t;
    const double m = std::abs(w);
    if (m >= T && weight * std::abs(t) < 1e-17) break;
    if (m > 1e80) break;
    w = f.eval(w);
    weight /= deg;
    if (j == cap - 1) {
      out.fail_not_escaping = true;
      return out;
    }
  }
  out.logphi = acc;
  out.ok = true;
  return out;
}

// Extended Boettcher logarithm at z, branch fixed by continuation along the
// outward ray z*(1+s) from the principal regime |w| >= 4R down to s = 0.
inline RayTrack log_boettcher_ray(const FamilyInstance& f, cplx z,
                                  double /*tolv*/ = tol::boettcher) {
  RayTrack rt;
  if (z == cplx(0.0) || !finite(z)) {
    rt.fail = BoettcherStatus::NumericFailure;
    return rt;
  }
  const double R = escape_region(f).radius;
  const double T = 4.0 * R;
  const double mz = std::abs(z);
  const double max_jump = 0.8;

  if (mz >= T) {
    TermSet ts = ray_terms(f, z, 0.0, T, nullptr, max_jump);
    if (!ts.ok) {
      rt.fail = ts.fail_not_escaping ? BoettcherStatus::NotEscaping
                                     : BoettcherStatus::NumericFailure;
      return rt;
    }
    rt.ok = true;
    rt.logphi = ts.logphi;
    return rt;
  }

  double s = T / mz - 1.0;
  TermSet cur = ray_terms(f, z, s, T, nullptr, max_jump);
  if (!cur.ok) {
    rt.fail = cur.fail_not_escaping ? BoettcherStatus::NotEscaping
                                    : BoettcherStatus::NumericFailure;
    return rt;
  }
  double fac = 0.5;
  int guard = 0;
  while (s > 0.0) {
    if (++guard > 4000) {
      rt.fail = BoettcherStatus::BranchAmbiguous;
      return rt;
    }
    const double s_next = (s < 1e-7 * (T / mz)) ? 0.0 : s * fac;
    TermSet trial = ray_terms(f, z, s_next, T, &cur.t, max_jump);
    if (trial.fail_not_escaping) {
      rt.fail = BoettcherStatus::NotEscaping;
      return rt;
    }
    if (trial.ok) {
      cur = std::move(trial);
      s = s_next;
      fac = 0.5;
      continue;
    }
    if (s_next == 0.0) {
      // retreat to ordinary halving before re-attempting the final jump
      fac = 0.5;
      s *= 0.5;
      if (s < 1e-13 * (T / mz)) {
        rt.fail = BoettcherStatus::BranchAmbiguous;
        return rt;
      }
      TermSet step = ray_terms(f, z, s, T, &cur.t, max_jump);
      if (!step.ok) {
        rt.fail = BoettcherStatus::BranchAmbiguous;
        return rt;
      }
      cur = std::move(step);
      continue;
    }
    fac = 0.5 * (1.0 + fac);
    if (1.0 - fac < 1e-10) {
      rt.fail = BoettcherStatus::BranchAmbiguous;
      return rt;
    }
  }
  rt.ok = true;
  rt.logphi = cur.logphi;
  return rt;
}

}  // namespace detail

struct BoettcherRecord {
  BoettcherStatus status = BoettcherStatus::NumericFailure;
  cplx value{};
  cplx log_value{};
  double residual = 0.0;  // |phi(f(z)) - phi(z)^deg| / |phi(z)|^deg
};

inline BoettcherRecord boettcher(const FamilyInstance& f, cplx z,
                                 double tolv = tol::boettcher) {
  BoettcherRecord rec;
  const PotentialRecord pot = potential(f, z, tolv);
  if (pot.inner_captured) {
    rec.status = BoettcherStatus::InnerCaptured;
    return rec;
  }
  if (!pot.escaped) {
    rec.status = BoettcherStatus::NotEscaping;
    return rec;
  }
  const detail::RayTrack tz = detail::log_boettcher_ray(f, z, tolv);
  if (!tz.ok) {
    rec.status = tz.fail;
    return rec;
  }
  const detail::RayTrack tf = detail::log_boettcher_ray(f, f.eval(z), tolv);
  if (!tf.ok) {
    rec.status = tf.fail;
    return rec;
  }
  cplx delta = tf.logphi - double(f.map_degree()) * tz.logphi;
  // branches equal mod 2*pi*i describe the same phi value
  delta -= cplx(0.0, kTwoPi * std::round(delta.imag() / kTwoPi));
  rec.status = BoettcherStatus::Ok;
  rec.log_value = tz.logphi;
  rec.value = std::exp(tz.logphi);
  rec.residual = std::abs(std::exp(delta) - 1.0);
  return rec;
}

enum class ZetaStatus {
  Ok,
  DegenerateFamily,    // collided critical points (a = 0)
  MarkedOrbitBounded,  // the marked orbit does not escape; zeta undefined
  NotInSlice,          // marked potential does not dominate the other one
  BranchAmbiguous,
  NumericFailure,
};

struct ZetaResult {
  ZetaStatus status = ZetaStatus::NumericFailure;
  cplx zeta{};
  double h_marked = 0.0;
  double h_other = 0.0;
};

// Boettcher position of the marked point: the co-critical point -(d-1)a for
// polynomials (the Eq.-style radial limit), the escaping critical value v_+
// for McMullen. zeta is computed whenever the marked orbit escapes; the
// status additionally reports whether the slice inequality h_other < h_marked
// holds.
inline ZetaResult zeta_of(const FamilyInstance& f) {
  ZetaResult out;
  if (f.is_polynomial() && f.a == cplx(0.0)) {
    out.status = ZetaStatus::DegenerateFamily;
    return out;
  }
  const cplx marked = f.slice_marked_point();
  const PotentialRecord pm = potential(f, marked);
  if (!pm.escaped) {
    out.status = ZetaStatus::MarkedOrbitBounded;
    return out;
  }
  out.h_marked = pm.value;
  const PotentialRecord po = potential(f, f.bounded_candidate());
  out.h_other = po.escaped ? po.value : 0.0;

  const detail::RayTrack tr = detail::log_boettcher_ray(f, marked);
  if (!tr.ok) {
    out.status = tr.fail == BoettcherStatus::BranchAmbiguous
                     ? ZetaStatus::BranchAmbiguous
                     : ZetaStatus::NumericFailure;
    return out;
  }
  out.zeta = std::exp(tr.logphi);
  if (!finite(out.zeta) || std::abs(out.zeta) <= 1.0) {
    out.status = ZetaStatus::NumericFailure;
    return out;
  }
  const bool in_slice =
      !(po.escaped && po.value >= pm.value) && !po.inner_captured;
  out.status = in_slice ? ZetaStatus::Ok : ZetaStatus::NotInSlice;
  return out;
}

}  // namespace juliadim
