#pragma once

// The two-level continued-fraction rotation-number domain: alpha with
// q*alpha = p +- 1/(a1 +- 1/(a2 + beta)), a1 >= N1, a2 >= N2 integers,
// 0 <= Re beta < 1, |Im beta| <= beta_im_bound. Membership inverts the form
// and returns a witness; the interior organizes into disk-like pieces indexed
// by (sign1, a1) that accumulate at p/q along the real axis.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "juliadim/core.hpp"

namespace juliadim {

struct OmegaSpec {
  long p = 0;
  long q = 1;
  long N1 = 10;
  long N2 = 10;
  double beta_im_bound = 1.0;
  // The two signs are treated as independent branches; set this to require
  // them equal (the stricter reading of the +- pair).
  bool synchronized_signs = false;

  static OmegaSpec make(long p, long q, long N1, long N2, double b,
                        bool synchronized = false) {
    if (q < 1) throw std::invalid_argument("OmegaSpec: q must be >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("OmegaSpec: gcd(p,q) must be 1");
    if (N1 < 1 || N2 < 1) throw std::invalid_argument("OmegaSpec: N1, N2 must be >= 1");
    if (!(b > 0.0)) throw std::invalid_argument("OmegaSpec: beta_im_bound must be > 0");
    return {p, q, N1, N2, b, synchronized};
  }
};

struct OmegaWitness {
  int sign1 = 1;
  int sign2 = 1;
  long a1 = 0;
  long a2 = 0;
  cplx beta{};
};

inline cplx omega_alpha(const OmegaSpec& spec, const OmegaWitness& w) {
  const cplx inner = double(w.a1) + double(w.sign2) / (double(w.a2) + w.beta);
  return (double(spec.p) + double(w.sign1) / inner) / double(spec.q);
}

// Invert q*alpha - p through the two continued-fraction levels, scanning the
// nearby integer candidates at each level, and accept the first witness that
// satisfies every constraint and reconstructs alpha to 1e-12.
inline std::optional<OmegaWitness> omega_membership(const OmegaSpec& spec, cplx alpha) {
  const cplx dev = double(spec.q) * alpha - double(spec.p);
  if (dev == cplx(0.0)) throw std::domain_error("omega_membership: alpha = p/q");
  const cplx u = 1.0 / dev;

  for (int s1 : {+1, -1}) {
    const cplx t = double(s1) * u;
    const double tr = t.real();
    if (!finite(tr)) continue;
    const long lo1 = long(std::floor(tr)) - 1;
    const long hi1 = long(std::ceil(tr)) + 1;
    for (long a1 = std::max(spec.N1, lo1); a1 <= hi1; ++a1) {
      const cplx r = t - double(a1);
      if (r == cplx(0.0)) continue;
      for (int s2 : {+1, -1}) {
        if (spec.synchronized_signs && s2 != s1) continue;
        const cplx w = double(s2) / r;
        const double wr = w.real();
        if (!finite(wr)) continue;
        const long lo2 = long(std::floor(wr)) - 1;
        const long hi2 = long(std::floor(wr)) + 1;
        for (long a2 = std::max(spec.N2, lo2); a2 <= hi2; ++a2) {
          const cplx beta = w - double(a2);
          if (!(beta.real() >= 0.0 && beta.real() < 1.0)) continue;
          if (!(std::abs(beta.imag()) <= spec.beta_im_bound)) continue;
          OmegaWitness wit{s1, s2, a1, a2, beta};
          if (std::abs(omega_alpha(spec, wit) - alpha) <= tol::omega_reconstruct)
            return wit;
        }
      }
    }
  }
  return std::nullopt;
}

struct OmegaDisk {
  int sign1 = 1;
  long a1 = 0;
  cplx center{};
  double radius = 0.0;
  double real_lo = 0.0;
  double real_hi = 0.0;
};

namespace detail {

// Endpoints of the real slice of the (sign1, a1) piece. For real alpha the
// admissible inner value sign2/(a2+beta) sweeps [-1/N2, 0) and (0, 1/N2], so
// the real trace is the interval between p + s1/(a1 + 1/N2) and
// p + s1/(a1 - 1/N2), scaled by 1/q (with a puncture at p + s1/a1).
inline void omega_real_span(const OmegaSpec& spec, int sign1, long a1, double* lo,
                            double* hi) {
  const double u = 1.0 / double(spec.N2);
  const double e1 = (double(spec.p) + double(sign1) / (double(a1) + u)) / double(spec.q);
  const double e2 = (double(spec.p) + double(sign1) / (double(a1) - u)) / double(spec.q);
  *lo = std::min(e1, e2);
  *hi = std::max(e1, e2);
}

inline double bisect_edge(const OmegaSpec& spec, double inside, double outside) {
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (inside + outside);
    bool member;
    try {
      member = omega_membership(spec, cplx(mid, 0.0)).has_value();
    } catch (const std::domain_error&) {
      member = false;
    }
    (member ? inside : outside) = mid;
  }
  return inside;
}

}  // namespace detail

// Boundary-sample the image of the admissible (a2, beta) half-strip through
// the continued-fraction form for each (sign1, a1), fit an enclosing
// center/radius, and bisect the real intersection along the axis.
inline std::vector<OmegaDisk> omega_disks(const OmegaSpec& spec, int count) {
  if (count < 1) throw std::invalid_argument("omega_disks: count must be >= 1");
  if (spec.N1 > (1L << 50) - count) throw std::domain_error("omega_disks: a1 overflow");
  // for N2 <= 2 adjacent pieces touch along the axis and the edge bisection
  // has no outside bracket
  if (spec.N2 < 3) throw std::domain_error("omega_disks: requires N2 >= 3");
  std::vector<OmegaDisk> disks;
  disks.reserve(2 * std::size_t(count));

  // boundary of the half-strip H = [N2, inf) x [-b, b], truncated far edge
  const double far = 1e6;
  std::vector<cplx> hb;
  const int n_edge = 256, n_ray = 384;
  for (int i = 0; i < n_edge; ++i) {
    const double y = -spec.beta_im_bound + 2.0 * spec.beta_im_bound * i / (n_edge - 1);
    hb.emplace_back(double(spec.N2), y);
  }
  for (int i = 0; i < n_ray; ++i) {
    const double x = double(spec.N2) * std::pow(far / double(spec.N2), double(i) / (n_ray - 1));
    hb.emplace_back(x, spec.beta_im_bound);
    hb.emplace_back(x, -spec.beta_im_bound);
  }

  for (int k = 0; k < count; ++k) {
    const long a1 = spec.N1 + k;
    for (int s1 : {+1, -1}) {
      OmegaDisk d;
      d.sign1 = s1;
      d.a1 = a1;
      std::vector<cplx> samples;
      samples.reserve(2 * hb.size());
      for (int s2 : {+1, -1}) {
        if (spec.synchronized_signs && s2 != s1) continue;
        for (const cplx& h : hb) {
          const cplx x = double(s2) / h;
          samples.push_back((double(spec.p) + double(s1) / (double(a1) + x)) /
                            double(spec.q));
        }
      }
      cplx mean(0.0);
      for (const cplx& s : samples) mean += s;
      mean /= double(samples.size());
      double rad = 0.0;
      for (const cplx& s : samples) rad = std::max(rad, std::abs(s - mean));
      d.center = mean;
      d.radius = rad;

      double lo, hi;
      detail::omega_real_span(spec, s1, a1, &lo, &hi);
      const double pad = (hi - lo) * 0.25 + 1e-15;
      d.real_lo = detail::bisect_edge(spec, lo + (hi - lo) * 1e-3, lo - pad);
      d.real_hi = detail::bisect_edge(spec, hi - (hi - lo) * 1e-3, hi + pad);
      disks.push_back(d);
    }
  }
  return disks;
}

// Real alpha inside a piece with |alpha - p/q| < closeness: smallest a1 whose
// entire real span fits the bound, midpoint of its bisected real interval,
// membership re-verified.
inline double pick_target_alpha(const OmegaSpec& spec, double closeness) {
  if (!(closeness > 0.0)) throw std::invalid_argument("pick_target_alpha: closeness <= 0");
  if (spec.N2 < 3) throw std::domain_error("pick_target_alpha: requires N2 >= 3");
  const double pq = double(spec.p) / double(spec.q);
  long a1 = spec.N1;
  for (;; ++a1) {
    double lo, hi;
    detail::omega_real_span(spec, +1, a1, &lo, &hi);
    if (std::max(std::abs(lo - pq), std::abs(hi - pq)) < closeness) break;
    if (a1 > (1L << 52)) throw std::runtime_error("pick_target_alpha: no qualifying piece");
  }
  double lo, hi;
  detail::omega_real_span(spec, +1, a1, &lo, &hi);
  const double pad = (hi - lo) * 0.25 + 1e-18;
  const double edge_lo = detail::bisect_edge(spec, lo + (hi - lo) * 1e-3, lo - pad);
  const double edge_hi = detail::bisect_edge(spec, hi - (hi - lo) * 1e-3, hi + pad);
  const double mid = 0.5 * (edge_lo + edge_hi);
  if (!omega_membership(spec, cplx(mid, 0.0)))
    throw std::runtime_error("pick_target_alpha: midpoint rejected");
  return mid;
}

}  // namespace juliadim
