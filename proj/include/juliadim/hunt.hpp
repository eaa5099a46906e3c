#pragma once

// Finite-depth mechanization of the nested-disk construction: find a
// Mandelbrot-copy component on the raster, drive a cycle parabolic on its
// boundary, retune the multiplier to a rotation number picked from the
// continued-fraction domain, shrink the surrounding disk, locate a fresh
// bounded component inside it, and recurse, recording dimension estimates
// per stage.

#include <optional>
#include <string>
#include <vector>

#include "juliadim/core.hpp"
#include "juliadim/dimension.hpp"
#include "juliadim/omega.hpp"
#include "juliadim/slice.hpp"

namespace juliadim {

struct HuntBudget {
  int raster_resolution = 96;
  int classify_iters = 400;
  int dim_resolution = 1024;
  int dim_depth = 400;
  double closeness_start = 0.05;  // shrinks by 4x per stage
  long pq_p = 0;
  long pq_q = 1;
  int threads = 1;
};

struct HuntStage {
  int index = 0;
  cplx region_center{};      // disk searched during this stage (U_{n-1})
  double region_radius = 0.0;
  SlicePoint parabolic_point{};
  CycleRecord parabolic_cycle{};
  long pq_p = 0, pq_q = 1;
  double alpha = 0.0;
  SlicePoint tuned_point{};
  CycleRecord tuned_cycle{};
  cplx disk_center{};
  double disk_radius = 0.0;
  bool nesting_ok = false;
  bool alpha_in_omega = false;
  std::optional<DimensionEstimate> box_estimate;
  std::optional<DimensionEstimate> pressure_estimate;
  std::string pressure_note;
};

enum class CantorVerdict { CertifiedCantor, NotCertified };

struct HuntReport {
  std::vector<HuntStage> stages;
  bool completed = false;
  std::string failure;
  cplx final_a{}, final_b{};
  CantorVerdict final_verdict = CantorVerdict::NotCertified;
};

// CertifiedCantor iff every critical orbit exceeds the escape radius within
// the given depth. Bounded or undecided-at-depth orbits are never certified.
inline CantorVerdict cantor_certificate(const FamilyInstance& f, int depth) {
  const double R = escape_region(f).radius;
  const bool mc = !f.is_polynomial();
  const double rho = mc ? mcmullen_inner_radius(f, R) : 0.0;
  for (const CriticalPoint& cp : f.critical_data().points) {
    cplx w = cp.point;
    bool escaped = false;
    for (int k = 0; k <= depth; ++k) {
      const double m = std::abs(w);
      if (m > R || (mc && k > 0 && m < rho)) {
        escaped = true;
        break;
      }
      if (k == depth) break;
      w = f.eval(w);
      if (!finite(w)) {
        escaped = true;
        break;
      }
    }
    if (!escaped) return CantorVerdict::NotCertified;
  }
  return CantorVerdict::CertifiedCantor;
}

namespace detail {

struct Component {
  std::vector<int> pixels;  // raster indices
  int attractor_cells = 0;
  int dominant_period = 0;
  int min_index = 1 << 30;  // deterministic tie-break
};

inline bool cell_bounded(const SlicePoint& c) {
  return c.status == SliceStatus::Ok && (c.cls == PointClass::BoundedWithAttractor ||
                                         c.cls == PointClass::BoundedUnresolved);
}

// 4-connected components of bounded cells.
inline std::vector<Component> bounded_components(const SliceRaster& r) {
  const int W = r.width, H = r.height;
  std::vector<int> label(std::size_t(W) * H, -1);
  std::vector<Component> comps;
  std::vector<int> stack;
  for (int idx = 0; idx < W * H; ++idx) {
    if (label[std::size_t(idx)] >= 0 || !cell_bounded(r.cells[std::size_t(idx)])) continue;
    const int id = int(comps.size());
    comps.emplace_back();
    stack.assign(1, idx);
    label[std::size_t(idx)] = id;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      Component& comp = comps.back();
      comp.pixels.push_back(cur);
      comp.min_index = std::min(comp.min_index, cur);
      const SlicePoint& c = r.cells[std::size_t(cur)];
      if (c.cls == PointClass::BoundedWithAttractor) ++comp.attractor_cells;
      const int ix = cur % W, iy = cur / W;
      const int nx[4] = {ix - 1, ix + 1, ix, ix};
      const int ny[4] = {iy, iy, iy - 1, iy + 1};
      for (int k = 0; k < 4; ++k) {
        if (nx[k] < 0 || nx[k] >= W || ny[k] < 0 || ny[k] >= H) continue;
        const int nidx = ny[k] * W + nx[k];
        if (label[std::size_t(nidx)] >= 0 || !cell_bounded(r.cells[std::size_t(nidx)]))
          continue;
        label[std::size_t(nidx)] = id;
        stack.push_back(nidx);
      }
    }
  }
  // dominant attractor period per component (mode, ties to the smaller)
  for (Component& comp : comps) {
    std::vector<std::pair<int, int>> freq;
    for (int idx : comp.pixels) {
      const SlicePoint& c = r.cells[std::size_t(idx)];
      if (c.cls != PointClass::BoundedWithAttractor) continue;
      bool hit = false;
      for (auto& pf : freq)
        if (pf.first == c.cycle.period) {
          ++pf.second;
          hit = true;
          break;
        }
      if (!hit) freq.emplace_back(c.cycle.period, 1);
    }
    int best = 0, bc = 0;
    for (auto& pf : freq)
      if (pf.second > bc || (pf.second == bc && pf.first < best)) {
        best = pf.first;
        bc = pf.second;
      }
    comp.dominant_period = best;
  }
  return comps;
}

// true when the component stays clear (2 pixels) of all previously used
// parameters
inline bool component_is_new(const SliceRaster& r, const Component& comp,
                             const std::vector<cplx>& used, double pixel) {
  for (int idx : comp.pixels) {
    const cplx a = r.a_at(idx % r.width, idx / r.width);
    for (const cplx& u : used)
      if (std::abs(a - u) <= 2.0 * pixel) return false;
  }
  return true;
}

}  // namespace detail

// One full hunt. Each stage renders the current region, picks the largest
// usable bounded component that avoids every previously used parameter,
// drives its cycle to multiplier exp(2 pi i p/q), retunes to a rotation
// number from the omega domain with closeness shrinking 4x per stage, and
// nests the next disk strictly inside the current one. Failures truncate the
// report; stages are never fabricated.
inline HuntReport run_hunt(const SliceSpec& spec, const OmegaSpec& omega, int depth,
                           const HuntBudget& budget, SliceWindow region,
                           const SlicePoint* anchor = nullptr) {
  HuntReport rep;
  if (depth < 1 || depth > 5) {
    rep.failure = "depth must lie in [1,5]";
    return rep;
  }

  cplx region_center = region.center;
  double region_radius = region.half_width;
  std::vector<cplx> used_params;
  SlicePoint anchor_pt;
  bool have_anchor = false;
  if (anchor) {
    anchor_pt = *anchor;
    have_anchor = true;
  }

  for (int stage_idx = 1; stage_idx <= depth; ++stage_idx) {
    HuntStage st;
    st.index = stage_idx;
    st.region_center = region_center;
    st.region_radius = region_radius;
    st.pq_p = budget.pq_p;
    st.pq_q = budget.pq_q;

    SliceWindow win{region_center, region_radius};
    const SliceRaster raster =
        render_slice(spec, win, budget.raster_resolution, budget.raster_resolution,
                     budget.classify_iters, budget.threads,
                     have_anchor ? &anchor_pt : nullptr);
    const double pixel = 2.0 * region_radius / budget.raster_resolution;

    auto comps = detail::bounded_components(raster);
    // candidate order: fully inside the region disk first, then larger first,
    // then smaller min index
    std::vector<const detail::Component*> cands;
    for (const auto& c : comps) {
      if (c.attractor_cells == 0) continue;
      if (!detail::component_is_new(raster, c, used_params, pixel)) continue;
      cands.push_back(&c);
    }
    auto inside_disk = [&](const detail::Component& c) {
      for (int idx : c.pixels)
        if (std::abs(raster.a_at(idx % raster.width, idx / raster.width) - region_center) >
            0.95 * region_radius)
          return false;
      return true;
    };
    std::sort(cands.begin(), cands.end(),
              [&](const detail::Component* x, const detail::Component* y) {
                const bool ix = inside_disk(*x), iy = inside_disk(*y);
                if (ix != iy) return ix;
                if (x->pixels.size() != y->pixels.size())
                  return x->pixels.size() > y->pixels.size();
                return x->min_index < y->min_index;
              });
    if (cands.empty()) {
      rep.failure = "stage " + std::to_string(stage_idx) +
                    ": no fresh bounded component with an attracting cell";
      return rep;
    }

    const double closeness =
        budget.closeness_start / std::pow(4.0, double(stage_idx - 1));
    st.alpha = pick_target_alpha(omega, closeness);
    st.alpha_in_omega = omega_membership(omega, cplx(st.alpha, 0.0)).has_value();
    const double alpha0 = double(budget.pq_p) / double(budget.pq_q);

    bool stage_done = false;
    std::string last_fail = "no usable component";
    for (const detail::Component* chosen : cands) {
      // restrict the root search to this component
      SliceRaster masked = raster;
      {
        std::vector<char> keep(masked.cells.size(), 0);
        for (int idx : chosen->pixels) keep[std::size_t(idx)] = 1;
        for (std::size_t i = 0; i < masked.cells.size(); ++i)
          if (!keep[i]) masked.cells[i].status = SliceStatus::Unsolved;
      }
      ParabolicRoot root = find_parabolic_root(spec, masked, budget.pq_p, budget.pq_q,
                                               chosen->dominant_period);
      if (!root.found) {
        last_fail = "parabolic root: " + root.failure;
        continue;
      }
      ParabolicRoot tuned = tune_multiplier(spec, root.point, root.cycle,
                                            cplx(alpha0, 0.0), cplx(st.alpha, 0.0));
      if (!tuned.found) {
        last_fail = "tune: " + tuned.failure;
        continue;
      }
      const double off = std::abs(tuned.point.a - region_center);
      if (!(off < region_radius)) {
        last_fail = "tuned parameter left the region";
        continue;
      }
      st.parabolic_point = root.point;
      st.parabolic_cycle = root.cycle;
      st.tuned_point = tuned.point;
      st.tuned_cycle = tuned.cycle;
      // nested disk: radius half the gap to the current region boundary
      st.disk_center = tuned.point.a;
      st.disk_radius = 0.5 * (region_radius - off);
      st.nesting_ok = off + st.disk_radius < region_radius;
      stage_done = true;
      break;
    }
    if (!stage_done) {
      rep.failure = "stage " + std::to_string(stage_idx) + ": " + last_fail;
      return rep;
    }

    // dimension estimates at the tuned parameter
    {
      const FamilyInstance f = spec.instance(st.tuned_point.a, st.tuned_point.b);
      const MembershipRaster mr = julia_membership_raster(
          f, budget.dim_resolution, budget.dim_depth, JuliaProxy::BoundaryBand, cplx(0.0),
          0.0, budget.threads);
      st.box_estimate = box_dimension(mr);
      if (cantor_certificate(f, budget.dim_depth) == CantorVerdict::CertifiedCantor) {
        const BranchSystemResult bs = build_branch_system(f);
        if (bs.status == BranchSystemStatus::Ok) {
          const PressureResult pr = pressure_dimension(bs.system, 5);
          if (pr.status == PressureStatus::Ok)
            st.pressure_estimate = pr.estimate;
          else
            st.pressure_note = pr.reason;
        } else {
          st.pressure_note = bs.reason;
        }
      } else {
        st.pressure_note = "tuned parameter has a bounded critical orbit";
      }
    }

    used_params.push_back(st.parabolic_point.a);
    used_params.push_back(st.tuned_point.a);
    rep.stages.push_back(st);

    region_center = st.disk_center;
    region_radius = st.disk_radius;
    anchor_pt = st.tuned_point;
    have_anchor = true;
  }

  rep.completed = true;
  const HuntStage& last = rep.stages.back();
  rep.final_a = last.tuned_point.a;
  rep.final_b = last.tuned_point.b;
  rep.final_verdict = cantor_certificate(
      spec.instance(rep.final_a, rep.final_b), budget.dim_depth);
  return rep;
}

}  // namespace juliadim
