#pragma once

// The three map families: monic centered cubics P(z) = z^3 - 3a^2 z + b,
// their degree-d relatives Q with critical points a and -(d-2)a, and the
// generalized McMullen maps z^n + a^2/z^n + b.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "juliadim/core.hpp"

namespace juliadim {

enum class FamilyKind { Cubic, MonicCenteredDegreeD, McMullen };

// Ascending coefficients c_0..c_d of the monic centered degree-d polynomial
// d * integral_0^z (w-a)^{d-2} (w+(d-2)a) dw.
// Leading coefficient is exactly 1 and the z^{d-1} coefficient is exactly 0.
inline std::vector<cplx> expand_q_coefficients(int degree, cplx a) {
  if (degree < 3) throw std::domain_error("expand_q_coefficients: degree must be >= 3");
  const int m = degree - 2;
  // (w - a)^m, ascending powers
  std::vector<cplx> p(static_cast<std::size_t>(m) + 1);
  std::vector<double> binom(static_cast<std::size_t>(m) + 1, 1.0);
  for (int i = 1; i <= m; ++i) binom[i] = binom[i - 1] * double(m - i + 1) / double(i);
  cplx neg_a_pow = 1.0;  // (-a)^0
  for (int i = m; i >= 0; --i) {
    p[i] = binom[i] * neg_a_pow;
    neg_a_pow *= -a;
  }
  // times (w + (d-2)a)
  std::vector<cplx> t(static_cast<std::size_t>(m) + 2, cplx(0.0));
  const cplx shift = double(degree - 2) * a;
  for (int i = 0; i <= m; ++i) {
    t[i + 1] += p[i];
    t[i] += shift * p[i];
  }
  // integrate term-wise, scale by d
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1, cplx(0.0));
  for (int k = 0; k <= m + 1; ++k) c[k + 1] = double(degree) * t[k] / double(k + 1);
  return c;
}

struct CriticalPoint {
  cplx point;
  int local_degree;
};

struct CriticalData {
  std::vector<CriticalPoint> points;
  std::vector<cplx> values;       // aligned with points
  std::optional<cplx> cocritical; // second preimage of f(a); polynomial kinds only
};

struct FamilyInstance {
  FamilyKind kind = FamilyKind::Cubic;
  cplx a{}, b{};
  int degree = 3;              // d for polynomials, n for McMullen
  std::vector<cplx> coeffs;    // ascending, empty for McMullen
  std::vector<cplx> dcoeffs;   // derivative coefficients

  static FamilyInstance cubic(cplx a, cplx b) { return make(FamilyKind::Cubic, 3, a, b); }

  static FamilyInstance monic_centered(int degree, cplx a, cplx b) {
    if (degree < 3) throw std::invalid_argument("monic_centered: degree must be >= 3");
    if (a == cplx(0.0)) throw std::invalid_argument("monic_centered: a must be nonzero");
    return make(FamilyKind::MonicCenteredDegreeD, degree, a, b);
  }

  static FamilyInstance mcmullen(int n, cplx a, cplx b) {
    if (n < 2) throw std::invalid_argument("mcmullen: n must be >= 2");
    if (a == cplx(0.0) || b == cplx(0.0))
      throw std::invalid_argument("mcmullen: a and b must be nonzero");
    FamilyInstance f;
    f.kind = FamilyKind::McMullen;
    f.a = a;
    f.b = b;
    f.degree = n;
    return f;
  }

  bool is_polynomial() const { return kind != FamilyKind::McMullen; }

  // Growth degree at infinity; the Boettcher conjugacy is to zeta -> zeta^map_degree.
  int map_degree() const { return degree; }

  // Number of preimages of a generic point.
  int preimage_count() const { return is_polynomial() ? degree : 2 * degree; }

  cplx eval(cplx z) const {
    if (is_polynomial()) return horner(coeffs, z);
    if (z == cplx(0.0)) throw std::domain_error("mcmullen eval: pole at z = 0");
    const cplx zn = ipow(z, degree);
    return zn + a * a / zn + b;
  }

  cplx eval_deriv(cplx z) const {
    if (is_polynomial()) return horner(dcoeffs, z);
    if (z == cplx(0.0)) throw std::domain_error("mcmullen eval_deriv: pole at z = 0");
    const cplx zn1 = ipow(z, degree - 1);
    const cplx zn = zn1 * z;
    return double(degree) * zn1 - double(degree) * a * a / (zn * z);
  }

  // f(w) / w^map_degree evaluated in u = 1/w; stays finite for huge |w|.
  cplx eval_ratio(cplx w) const {
    const cplx u = 1.0 / w;
    if (is_polynomial()) {
      // sum_{k=0..d} c_{d-k} u^k with c_d = 1
      cplx acc = coeffs[0];
      for (int k = degree - 1; k >= 0; --k) acc = acc * u + coeffs[degree - k];
      return acc;
    }
    const cplx un = ipow(u, degree);
    return 1.0 + b * un + a * a * un * un;
  }

  // The critical point whose orbit may stay bounded on the slice:
  // -(d-2)a for polynomials, the critical value v_- = b - 2a for McMullen.
  cplx bounded_candidate() const {
    return is_polynomial() ? cplx(-double(degree - 2)) * a : b - 2.0 * a;
  }

  // The point whose Boettcher position is prescribed; for polynomials the
  // co-critical point -(d-1)a (the simple preimage of f(a)), for McMullen the
  // critical value v_+ = b + 2a.
  cplx slice_marked_point() const {
    return is_polynomial() ? cplx(-double(degree - 1)) * a : b + 2.0 * a;
  }

  CriticalData critical_data() const {
    CriticalData cd;
    if (is_polynomial()) {
      if (a == cplx(0.0)) {
        cd.points = {{cplx(0.0), degree}};
        cd.values = {b};
        cd.cocritical = cplx(0.0);
        return cd;
      }
      cd.points = {{a, degree - 1}, {cplx(-double(degree - 2)) * a, 2}};
      cd.values = {eval(cd.points[0].point), eval(cd.points[1].point)};
      cd.cocritical = cplx(-double(degree - 1)) * a;
      return cd;
    }
    // 2n simple critical points r * exp(i pi j / n), r the principal n-th
    // root of a; even j maps to v_+ = b + 2a, odd j to v_- = b - 2a.
    const int n = degree;
    const cplx r = std::pow(a, 1.0 / double(n));
    cd.points.reserve(2 * n);
    cd.values.reserve(2 * n);
    for (int j = 0; j < 2 * n; ++j) {
      const double th = kPi * double(j) / double(n);
      cd.points.push_back({r * std::polar(1.0, th), 2});
      cd.values.push_back((j % 2 == 0) ? b + 2.0 * a : b - 2.0 * a);
    }
    return cd;
  }

 private:
  static FamilyInstance make(FamilyKind kind, int degree, cplx a, cplx b) {
    FamilyInstance f;
    f.kind = kind;
    f.a = a;
    f.b = b;
    f.degree = degree;
    f.coeffs = expand_q_coefficients(degree, a);
    f.coeffs[0] = b;
    f.dcoeffs.resize(static_cast<std::size_t>(degree));
    for (int k = 1; k <= degree; ++k) f.dcoeffs[k - 1] = double(k) * f.coeffs[k];
    return f;
  }

  static cplx horner(const std::vector<cplx>& c, cplx z) {
    cplx acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
    return acc;
  }

  static cplx ipow(cplx z, int k) {
    cplx acc = 1.0;
    while (k-- > 0) acc *= z;
    return acc;
  }
};

}  // namespace juliadim
