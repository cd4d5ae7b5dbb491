#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cyclofun/series.hpp"
#include "cyclofun/types.hpp"

namespace cyclofun {

/// Z_n together with omega = exp(2 pi i / n) and the table omega^k, k in Z_n.
class CyclicContext {
 public:
  /// Throws std::invalid_argument when n < 2.
  explicit CyclicContext(int n);

  int order() const noexcept { return n_; }
  Complex omega() const noexcept { return powers_[n_ > 1 ? 1 : 0]; }
  /// omega^k for any integer k.
  Complex omega_pow(std::int64_t k) const noexcept { return powers_[static_cast<std::size_t>(zmod(k, n_))]; }

 private:
  int n_;
  std::vector<Complex> powers_;
};

CyclicContext make_context(int n);

/// alpha with one chosen n-th root: root^n = alpha.
struct AlphaRoot {
  Complex alpha;
  Complex root;
  int order;
  int branch;
};

/// Principal n-th root (argument in (-pi/n, pi/n]) times omega^branch.
AlphaRoot alpha_root(Complex alpha, int n, int branch = 0);

/// Coefficient sieve realising the alpha-projection Pi_k^alpha on a series:
/// keeps degrees nm+k with weight alpha^m. For alpha = 0 only m = 0 survives.
TruncatedSeries project_series(const TruncatedSeries& s, const CyclicContext& ctx, int k, const AlphaRoot& a);

using Evaluator = std::function<Complex(Complex)>;

/// (1/n) r^{-k} sum_j omega^{-jk} f(omega^j r z). Requires alpha != 0.
Complex project_pointwise(const Evaluator& f, const CyclicContext& ctx, int k, const AlphaRoot& a, Complex z);

/// (Omega s)(z) = s(omega z).
TruncatedSeries omega_scale(const TruncatedSeries& s, const CyclicContext& ctx);

}  // namespace cyclofun
