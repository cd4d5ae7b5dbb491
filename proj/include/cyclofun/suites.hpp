#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cyclofun/psi.hpp"
#include "cyclofun/report.hpp"
#include "cyclofun/series.hpp"

namespace cyclofun {

/// Seeded sampler. Doubles come from the raw 64-bit engine output, so a seed
/// reproduces the same stream on every standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform on the disk |z| <= radius.
  Complex disk(double radius = 1.0);
  /// Uniform on the unit circle.
  Complex circle();
  /// Random Laurent window with coefficients in the unit disk.
  TruncatedSeries series(int min_deg, int max_deg);
  Polynomial polynomial(int degree);

 private:
  std::mt19937_64 engine_;
};

struct SuiteConfig {
  int n = 3;
  Complex alpha{1.0, 0.0};
  int branch = 0;
  std::optional<Complex> q;
  int truncation = kDefaultTruncation;
  std::uint64_t seed = 1;
  int samples = 8;
};

/// Group law, matrix de Moivre, det H = 1, cubic surfaces, product and
/// addition formulas, determinant products: worst case over seeded (z, w)
/// pairs from the unit disk.
std::vector<IdentityReport> demoivre_suite(const SuiteConfig& cfg);

/// gamma(alpha) and Sylvester-matrix facts, spectral vs direct determinants,
/// generator ODE, the determinant-product closed form, and the negative
/// results for non-exp L.
std::vector<IdentityReport> circulant_suite(const SuiteConfig& cfg);

/// q-Leibniz, Jackson-derivative routes, derivative ladder, Omega
/// eigenrelation, q-Laguerre lowering, psi-binomial identities, generating
/// functions and q -> 1 continuity. q defaults to 0.5.
std::vector<IdentityReport> qpsi_suite(const SuiteConfig& cfg);

}  // namespace cyclofun
