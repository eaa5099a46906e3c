#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <cstddef>

namespace juliadim {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline bool finite(double x) { return std::isfinite(x); }
inline bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Default tolerances. CLI runs echo these into the manifest so outputs are
// self-describing.
namespace tol {
inline constexpr double potential = 1e-12;
inline constexpr int potential_max_depth = 256;
inline constexpr double boettcher = 1e-12;
inline constexpr double slice_residual = 1e-8;
inline constexpr int slice_newton_steps = 50;
inline constexpr double cycle_near_return = 1e-3;
inline constexpr int cycle_max_period = 64;
inline constexpr double cycle_polish = 1e-9;
inline constexpr double parabolic = 1e-9;
inline constexpr double tune_stall = 1e-8;
inline constexpr double omega_reconstruct = 1e-12;
inline constexpr double pressure_power = 1e-10;
inline constexpr double branch_margin_rel = 1e-3;
}  // namespace tol

inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 1469598103934665603ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace juliadim
