#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

namespace cyclofun {

using Complex = std::complex<double>;

/// Default relative tolerance for complex comparisons, with an absolute floor.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsFloor = 1e-12;

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Residual of a against b: absolute below magnitude 1, relative above.
inline double mixed_residual(Complex a, Complex b) noexcept {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) / scale;
}

inline bool approx_equal(Complex a, Complex b, double rel = kRelTol,
                         double abs_floor = kAbsFloor) noexcept {
  return std::abs(a - b) <= std::max(abs_floor, rel * std::max(std::abs(a), std::abs(b)));
}

/// Non-negative residue of k modulo n (n > 0).
inline int zmod(std::int64_t k, int n) noexcept {
  const auto r = static_cast<int>(k % n);
  return r < 0 ? r + n : r;
}

/// Integer power by repeated squaring, 0^0 = 1. Negative exponents invert.
/// Accumulates in long double so that z^k stays within ~1 ulp for |k| <= 256.
inline Complex ipow(Complex z, std::int64_t k) {
  using LD = std::complex<long double>;
  LD base(z.real(), z.imag());
  LD acc(1.0L, 0.0L);
  const bool invert = k < 0;
  std::uint64_t e = invert ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  while (e != 0) {
    if (e & 1U) acc *= base;
    base *= base;
    e >>= 1U;
  }
  if (invert) acc = LD(1.0L, 0.0L) / acc;
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

}  // namespace cyclofun
