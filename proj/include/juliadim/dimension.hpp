#pragma once

// Two independent dimension estimators: box counting on membership rasters,
// and the pressure-equation root (spectral radius of the weighted transition
// matrix equal to 1) on hyperbolic Cantor repellers, plus a synthetic
// similarity-IFS harness for calibration.

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "juliadim/core.hpp"
#include "juliadim/families.hpp"
#include "juliadim/potential.hpp"
#include "juliadim/raster.hpp"

namespace juliadim {

enum class JuliaProxy {
  FilledThroughDepth,  // orbit stayed bounded through the depth cap
  BoundaryBand,        // distance-to-Julia below the pixel size
};

struct MembershipRaster {
  int resolution = 0;
  cplx center{};
  double half_width = 0.0;
  std::vector<std::uint8_t> bits;

  bool bit(int ix, int iy) const { return bits[std::size_t(iy) * resolution + ix] != 0; }
  std::size_t popcount() const {
    std::size_t n = 0;
    for (auto b : bits) n += b;
    return n;
  }
};

// Outer radius of the non-escaping set: positive root of
// x^d = sum_i |c_i| x^i + x (beyond it the modulus grows strictly), padded.
inline double julia_window_radius(const FamilyInstance& f) {
  if (!f.is_polynomial()) {
    // non-escaping set lies between the inner disk and |z| = R
    return 0.75 * escape_region(f).radius + 1.0;
  }
  double lo = 0.0, hi = escape_region(f).radius;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    double rhs = 0.0;
    for (int k = f.degree - 1; k >= 0; --k) rhs = rhs * mid + std::abs(f.coeffs[std::size_t(k)]);
    rhs += mid;
    (std::pow(mid, f.degree) > rhs ? hi : lo) = mid;
  }
  return 1.15 * hi + 0.05;
}

// Fill the membership bits for one map. The boundary band marks escaped
// pixels whose estimated distance to the Julia set
// (|z_k| log|z_k| / |(f^k)'(z)| at escape) is below the pixel half-diagonal,
// plus bounded pixels with an escaped 4-neighbor (bounded cells deep inside a
// Fatou component stay unmarked). McMullen orbits captured by the inner disk
// count as escaped through the pole.
inline MembershipRaster julia_membership_raster(const FamilyInstance& f, int resolution,
                                                int depth, JuliaProxy proxy,
                                                cplx center = cplx(0.0),
                                                double half_width = 0.0,
                                                int threads = 1) {
  if (resolution < 2) throw std::invalid_argument("julia_membership_raster: resolution");
  MembershipRaster r;
  r.resolution = resolution;
  r.center = center;
  r.half_width = half_width > 0.0 ? half_width : julia_window_radius(f);
  r.bits.assign(std::size_t(resolution) * resolution, 0);

  const double R = escape_region(f).radius;
  const bool mc = !f.is_polynomial();
  const double rho = mc ? mcmullen_inner_radius(f, R) : 0.0;
  const double px = 2.0 * r.half_width / resolution;
  const double band = 0.70710678118654752 * px;  // half-diagonal

  enum : std::uint8_t { kOut = 0, kBand = 1, kBounded = 2 };
  std::vector<std::uint8_t> state(r.bits.size());

  parallel_rows(resolution, threads, [&](int iy) {
    for (int ix = 0; ix < resolution; ++ix) {
      const double x = center.real() + r.half_width * (2.0 * (ix + 0.5) / resolution - 1.0);
      const double y = center.imag() + r.half_width * (1.0 - 2.0 * (iy + 0.5) / resolution);
      cplx z(x, y);
      cplx dz(1.0, 0.0);
      std::uint8_t st = kBounded;
      for (int k = 0; k < depth; ++k) {
        const double m = std::abs(z);
        if (mc && m < rho) {
          st = kOut;  // inner-captured: deep inside the pole's escape chain
          break;
        }
        if (m > R) {
          const double dm = std::abs(dz);
          // distance estimate m*log(m)/|(f^k)'|; a degenerate derivative
          // means a critical orbit through the pixel, keep it
          st = (dm > 0.0 ? (m * std::log(m) / dm <= band) : true) ? kBand : kOut;
          break;
        }
        dz *= f.eval_deriv(z);
        z = f.eval(z);
        if (!finite(z) || !finite(dz)) {
          st = kOut;
          break;
        }
      }
      state[std::size_t(iy) * resolution + ix] = st;
    }
  });

  parallel_rows(resolution, threads, [&](int iy) {
    for (int ix = 0; ix < resolution; ++ix) {
      const std::size_t idx = std::size_t(iy) * resolution + ix;
      const std::uint8_t st = state[idx];
      bool val;
      if (proxy == JuliaProxy::FilledThroughDepth) {
        val = st == kBounded;
      } else if (st == kBand) {
        val = true;
      } else if (st == kBounded) {
        val = (ix > 0 && state[idx - 1] != kBounded) ||
              (ix + 1 < resolution && state[idx + 1] != kBounded) ||
              (iy > 0 && state[idx - resolution] != kBounded) ||
              (iy + 1 < resolution && state[idx + resolution] != kBounded);
      } else {
        val = false;
      }
      r.bits[idx] = val ? 1 : 0;
    }
  });
  return r;
}

struct DimensionEstimate {
  enum class Method { BoxCount, Pressure };
  Method method = Method::BoxCount;
  double value = 0.0;
  double uncertainty = 0.0;
  double fit_residual = 0.0;  // box-count only
  int scales_used = 0;        // box-count only
  int depth = 0;              // refinement depth (pressure) or orbit depth
  int branch_count = 0;       // pressure only
};

// Least-squares slope of log N(eps) against log(1/eps) over dyadic box sizes
// 4 .. resolution/16 (at least five scales required). Returns nothing for an
// empty raster or one too small for five scales.
inline std::optional<DimensionEstimate> box_dimension(const MembershipRaster& r) {
  const int res = r.resolution;
  std::vector<int> sizes;
  for (int s = 4; s * 16 <= res; s *= 2) sizes.push_back(s);
  if (sizes.size() < 5 || r.popcount() == 0) return std::nullopt;

  std::vector<double> xs, ys;
  for (int s : sizes) {
    const int nb = res / s;
    std::size_t count = 0;
    for (int by = 0; by < nb; ++by)
      for (int bx = 0; bx < nb; ++bx) {
        bool hit = false;
        for (int iy = by * s; iy < (by + 1) * s && !hit; ++iy)
          for (int ix = bx * s; ix < (bx + 1) * s; ++ix)
            if (r.bit(ix, iy)) {
              hit = true;
              break;
            }
        count += hit;
      }
    if (count == 0) return std::nullopt;
    xs.push_back(std::log(double(res) / s));  // log(1/eps), eps = s/res
    ys.push_back(std::log(double(count)));
  }
  const int n = int(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double det = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / det;
  const double icept = (sy * sxx - sx * sxy) / det;
  double ss = 0;
  for (int i = 0; i < n; ++i) {
    const double e = ys[i] - (slope * xs[i] + icept);
    ss += e * e;
  }
  const double sigma2 = ss / std::max(1, n - 2);
  DimensionEstimate est;
  est.method = DimensionEstimate::Method::BoxCount;
  est.value = std::min(2.0, std::max(0.0, slope));
  est.uncertainty = std::sqrt(sigma2 * n / det);
  est.fit_residual = std::sqrt(ss / n);
  est.scales_used = n;
  return est;
}

// Occupied-area fractions of filled-set rasters at increasing resolutions.
inline std::vector<double> area_decay_diagnostic(const std::vector<MembershipRaster>& seq) {
  std::vector<double> out;
  out.reserve(seq.size());
  for (const auto& r : seq)
    out.push_back(double(r.popcount()) / (double(r.resolution) * r.resolution));
  return out;
}

// A conformal repeller presented by its inverse branches on a round base
// disk: branch images pairwise disjoint and compactly contained, transitions
// all allowed unless restricted.
struct BranchSystem {
  int branch_count = 0;
  cplx base_center{};
  double base_radius = 0.0;
  double separation_margin = 0.0;
  std::function<cplx(int, cplx)> apply_branch;      // g_i(z)
  std::function<double(cplx)> expansion_at;         // |f'(x)| one step
  std::vector<std::vector<std::uint8_t>> adjacency;
};

inline BranchSystem similarity_ifs(const std::vector<std::pair<cplx, cplx>>& maps,
                                   cplx base_center = cplx(0.0), double base_radius = 1.0) {
  if (maps.size() < 2) throw std::invalid_argument("similarity_ifs: need >= 2 maps");
  for (const auto& m : maps)
    if (!(std::abs(m.first) < 1.0 && std::abs(m.first) > 0.0))
      throw std::invalid_argument("similarity_ifs: factors must be contractions");
  BranchSystem s;
  s.branch_count = int(maps.size());
  s.base_center = base_center;
  s.base_radius = base_radius;
  s.separation_margin = base_radius;  // informational only here
  auto mcopy = maps;
  s.apply_branch = [mcopy](int i, cplx z) { return mcopy[i].first * z + mcopy[i].second; };
  // expansion of the underlying map: for a point in branch i's image the
  // inverse derivative is 1/|factor_i|; identify the branch by nearest fixed
  // point image
  s.expansion_at = [mcopy](cplx x) {
    int best = 0;
    double bd = 1e300;
    for (std::size_t i = 0; i < mcopy.size(); ++i) {
      const cplx fix = mcopy[i].second / (1.0 - mcopy[i].first);
      const double d = std::abs(x - fix);
      if (d < bd) {
        bd = d;
        best = int(i);
      }
    }
    return 1.0 / std::abs(mcopy[best].first);
  };
  s.adjacency.assign(maps.size(), std::vector<std::uint8_t>(maps.size(), 1));
  return s;
}

namespace detail {

// All preimages of z under f via the Durand-Kerner iteration on the
// polynomial f(w) - z (for McMullen, w^{2n} + (b - z) w^n + a^2).
inline std::vector<cplx> preimages(const FamilyInstance& f, cplx z) {
  std::vector<cplx> c;
  if (f.is_polynomial()) {
    c = f.coeffs;
    c[0] -= z;
  } else {
    c.assign(2 * std::size_t(f.degree) + 1, cplx(0.0));
    c[0] = f.a * f.a;
    c[std::size_t(f.degree)] = f.b - z;
    c[2 * std::size_t(f.degree)] = 1.0;
  }
  const int deg = int(c.size()) - 1;
  // deterministic non-symmetric starting points on a circle
  double scale = 0.0;
  for (int i = 0; i < deg; ++i) scale = std::max(scale, std::pow(std::abs(c[i]), 1.0 / (deg - i)));
  scale = std::max(scale, 1e-8);
  std::vector<cplx> w(deg);
  for (int i = 0; i < deg; ++i)
    w[i] = scale * std::polar(1.0, kTwoPi * (double(i) + 0.25) / deg + 0.4);
  auto eval = [&](cplx x) {
    cplx acc = c[deg];
    for (int i = deg - 1; i >= 0; --i) acc = acc * x + c[i];
    return acc;
  };
  for (int it = 0; it < 300; ++it) {
    double moved = 0.0;
    for (int i = 0; i < deg; ++i) {
      cplx den = 1.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= (w[i] - w[j]);
      if (den == cplx(0.0)) {
        den = 1e-30;
      }
      const cplx delta = eval(w[i]) / den;
      w[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-13 * (1.0 + scale)) break;
  }
  return w;
}

}  // namespace detail

enum class BranchSystemStatus { Ok, NotHyperbolicCantor };

struct BranchSystemResult {
  BranchSystemStatus status = BranchSystemStatus::NotHyperbolicCantor;
  std::string reason;
  BranchSystem system;
};

// Inverse-branch system of a map whose critical values all escape: round base
// disk just inside the smallest critical-value modulus, preimage containment
// and branch disjointness verified on boundary samples, branch labels
// propagated around the boundary loop (monodromy must vanish).
inline BranchSystemResult build_branch_system(const FamilyInstance& f) {
  BranchSystemResult out;
  const CriticalData cd = f.critical_data();
  double min_cv = 1e300;
  for (const cplx& v : cd.values) {
    const PotentialRecord pr = potential(f, v);
    if (!pr.escaped) {
      out.reason = "a critical value does not escape";
      return out;
    }
    min_cv = std::min(min_cv, std::abs(v));
  }
  const double rho = 0.95 * min_cv;
  if (!(rho > 1e-9)) {
    out.reason = "critical values too close to the origin for a round base disk";
    return out;
  }
  const int d = f.preimage_count();
  const int M = 512;
  const double margin = tol::branch_margin_rel * rho;

  // boundary preimages with branch tracking around the loop
  const std::size_t nd = std::size_t(d);
  std::vector<std::vector<cplx>> branch(nd);
  for (int m = 0; m <= M; ++m) {
    const cplx z = rho * std::polar(1.0, kTwoPi * double(m % M) / M);
    std::vector<cplx> roots = detail::preimages(f, z);
    if (int(roots.size()) != d) {
      out.reason = "preimage count mismatch";
      return out;
    }
    for (const cplx& w : roots) {
      if (!(std::abs(w) <= rho - margin)) {
        out.reason = "preimages not compactly contained in the base disk";
        return out;
      }
    }
    if (m == 0) {
      // deterministic initial labels: by argument, then modulus
      std::vector<int> idx(roots.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
      std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        const double ai = std::arg(roots[std::size_t(i)]), aj = std::arg(roots[std::size_t(j)]);
        if (ai != aj) return ai < aj;
        return std::abs(roots[std::size_t(i)]) < std::abs(roots[std::size_t(j)]);
      });
      for (int i = 0; i < d; ++i) branch[std::size_t(i)].push_back(roots[std::size_t(idx[std::size_t(i)])]);
      continue;
    }
    // greedy nearest matching to the previous sample's branch points
    std::vector<int> assign(nd, -1);
    std::vector<char> used(nd, 0);
    for (int pass = 0; pass < d; ++pass) {
      double best = 1e300;
      int bi = -1, bj = -1;
      for (int i = 0; i < d; ++i) {
        if (assign[std::size_t(i)] >= 0) continue;
        for (int j = 0; j < d; ++j) {
          if (used[std::size_t(j)]) continue;
          const double dist = std::abs(branch[std::size_t(i)].back() - roots[std::size_t(j)]);
          if (dist < best) {
            best = dist;
            bi = i;
            bj = j;
          }
        }
      }
      assign[std::size_t(bi)] = bj;
      used[std::size_t(bj)] = 1;
    }
    if (m == M) {
      // closing the loop must restore every label
      for (int i = 0; i < d; ++i) {
        if (std::abs(roots[assign[std::size_t(i)]] - branch[std::size_t(i)].front()) >
            1e-6 * rho) {
          out.reason = "branch monodromy around the base boundary";
          return out;
        }
      }
      break;
    }
    for (int i = 0; i < d; ++i) branch[std::size_t(i)].push_back(roots[assign[std::size_t(i)]]);
  }

  // pairwise separation of branch images
  double sep = 1e300;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (const cplx& wi : branch[std::size_t(i)])
        for (const cplx& wj : branch[std::size_t(j)]) sep = std::min(sep, std::abs(wi - wj));
  if (!(sep > margin)) {
    out.reason = "branch images are not separated";
    return out;
  }

  std::vector<cplx> centroids(nd);
  for (int i = 0; i < d; ++i) {
    cplx acc = 0.0;
    for (const cplx& w : branch[std::size_t(i)]) acc += w;
    centroids[std::size_t(i)] = acc / double(branch[std::size_t(i)].size());
  }

  BranchSystem sys;
  sys.branch_count = d;
  sys.base_center = cplx(0.0);
  sys.base_radius = rho;
  sys.separation_margin = sep;
  FamilyInstance fc = f;
  sys.apply_branch = [fc, centroids](int i, cplx z) {
    std::vector<cplx> roots = detail::preimages(fc, z);
    int best = 0;
    double bd = 1e300;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const double dist = std::abs(roots[k] - centroids[std::size_t(i)]);
      if (dist < bd) {
        bd = dist;
        best = int(k);
      }
    }
    return roots[std::size_t(best)];
  };
  sys.expansion_at = [fc](cplx x) { return std::abs(fc.eval_deriv(x)); };
  sys.adjacency.assign(std::size_t(d), std::vector<std::uint8_t>(std::size_t(d), 1));
  out.status = BranchSystemStatus::Ok;
  out.system = std::move(sys);
  return out;
}

enum class PressureStatus { Ok, PowerIterationFailed, NotContracting, MonotonicityFailed };

struct PressureResult {
  PressureStatus status = PressureStatus::Ok;
  DimensionEstimate estimate;
  std::string reason;
};

namespace detail {

struct CylinderData {
  std::vector<double> expansion;  // |f'| at each cylinder base point
  std::vector<int> last_symbol;
  std::vector<int> suffix_index;  // index of the shifted word
  int count = 0;
};

// Depth-k cylinders over the branch alphabet; base points are the fixed
// points of the k-fold branch compositions (periodic points of the expanding
// map), found by iterating the contraction from the base center.
inline CylinderData cylinders(const BranchSystem& sys, int k) {
  const int d = sys.branch_count;
  int count = 1;
  for (int i = 0; i < k; ++i) count *= d;
  CylinderData cd;
  cd.count = count;
  cd.expansion.resize(std::size_t(count));
  cd.last_symbol.resize(std::size_t(count));
  cd.suffix_index.resize(std::size_t(count));
  const std::size_t nk = std::size_t(k);
  std::vector<int> word(nk);
  for (int w = 0; w < count; ++w) {
    int tmp = w;
    for (int i = k - 1; i >= 0; --i) {
      word[std::size_t(i)] = tmp % d;
      tmp /= d;
    }
    // fixed point of g_{word[0]} o ... o g_{word[k-1]}
    cplx x = sys.base_center;
    for (int it = 0; it < 400; ++it) {
      cplx y = x;
      for (int i = k - 1; i >= 0; --i) y = sys.apply_branch(word[std::size_t(i)], y);
      if (std::abs(y - x) < 1e-12 * (1.0 + std::abs(y))) {
        x = y;
        break;
      }
      x = y;
    }
    cd.expansion[std::size_t(w)] = sys.expansion_at(x);
    cd.last_symbol[std::size_t(w)] = word[std::size_t(k - 1)];
    // shift drops the leading symbol
    cd.suffix_index[std::size_t(w)] = w - word[0] * (count / d);
  }
  return cd;
}

// Perron root of the weighted cylinder transition matrix by power iteration.
inline bool spectral_radius(const CylinderData& cd, const BranchSystem& sys, double s,
                            double* out) {
  const int n = cd.count;
  const int d = sys.branch_count;
  const std::size_t nn = std::size_t(n);
  std::vector<double> weight(nn);
  for (int i = 0; i < n; ++i) weight[std::size_t(i)] = std::pow(cd.expansion[std::size_t(i)], -s);
  std::vector<double> v(nn, 1.0), nv(nn);
  double rho_prev = 0.0;
  for (int it = 0; it < 20000; ++it) {
    // transitions w -> w' with w' = shift(w)*d + j, allowed when the symbol
    // step last(w') = j can follow last(w)
    for (int w = 0; w < n; ++w) {
      const int base = cd.suffix_index[std::size_t(w)] * d;
      const int lw = cd.last_symbol[std::size_t(w)];
      double acc = 0.0;
      for (int j = 0; j < d; ++j) {
        if (sys.adjacency[std::size_t(lw)][std::size_t(j)] == 0) continue;
        acc += v[std::size_t(base + j)];
      }
      nv[std::size_t(w)] = weight[std::size_t(w)] * acc;
    }
    double norm = 0.0;
    for (double x : nv) norm = std::max(norm, std::abs(x));
    if (!(norm > 0.0) || !std::isfinite(norm)) return false;
    for (int w = 0; w < n; ++w) v[std::size_t(w)] = nv[std::size_t(w)] / norm;
    if (it > 4 && std::abs(norm - rho_prev) <= tol::pressure_power * std::max(1.0, norm)) {
      *out = norm;
      return true;
    }
    rho_prev = norm;
  }
  return false;
}

inline bool pressure_root(const CylinderData& cd, const BranchSystem& sys, double* root,
                          PressureResult* out) {
  double lo = 0.0, hi = 2.0;
  double rho_lo, rho_hi;
  if (!spectral_radius(cd, sys, lo, &rho_lo) || !spectral_radius(cd, sys, hi, &rho_hi)) {
    out->status = PressureStatus::PowerIterationFailed;
    out->reason = "power iteration did not converge; increase depth";
    return false;
  }
  if (!(rho_lo > 1.0)) {
    out->status = PressureStatus::NotContracting;
    out->reason = "spectral radius at s=0 not above 1";
    return false;
  }
  if (!(rho_hi < 1.0)) {
    out->status = PressureStatus::NotContracting;
    out->reason = "system is insufficiently hyperbolic on the base disk";
    return false;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    double rho_mid;
    if (!spectral_radius(cd, sys, mid, &rho_mid)) {
      out->status = PressureStatus::PowerIterationFailed;
      out->reason = "power iteration did not converge; increase depth";
      return false;
    }
    (rho_mid > 1.0 ? lo : hi) = mid;
  }
  *root = 0.5 * (lo + hi);
  return true;
}

}  // namespace detail

// Bowen-root dimension: refine to depth-k cylinders, bisect s in [0,2] for
// spectral radius 1, uncertainty from the previous depth. The spectral radius
// is checked to decrease across ten sample values of s first.
inline PressureResult pressure_dimension(const BranchSystem& sys, int refinement_depth) {
  PressureResult out;
  if (refinement_depth < 2) refinement_depth = 2;
  const detail::CylinderData cd = detail::cylinders(sys, refinement_depth);
  const detail::CylinderData cd_prev = detail::cylinders(sys, refinement_depth - 1);

  // monotonicity of s -> spectral radius
  double last = 1e300;
  for (int i = 0; i <= 10; ++i) {
    double rho;
    if (!detail::spectral_radius(cd, sys, 0.2 * i, &rho)) {
      out.status = PressureStatus::PowerIterationFailed;
      out.reason = "power iteration did not converge; increase depth";
      return out;
    }
    if (i > 0 && !(rho < last)) {
      out.status = PressureStatus::MonotonicityFailed;
      out.reason = "spectral radius not strictly decreasing in s";
      return out;
    }
    last = rho;
  }

  double root, root_prev;
  if (!detail::pressure_root(cd, sys, &root, &out)) return out;
  if (!detail::pressure_root(cd_prev, sys, &root_prev, &out)) return out;
  out.status = PressureStatus::Ok;
  out.estimate.method = DimensionEstimate::Method::Pressure;
  out.estimate.value = root;
  out.estimate.uncertainty = std::abs(root - root_prev);
  out.estimate.depth = refinement_depth;
  out.estimate.branch_count = sys.branch_count;
  return out;
}

}  // namespace juliadim
