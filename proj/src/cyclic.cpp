#include "cyclofun/cyclic.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace cyclofun {

CyclicContext::CyclicContext(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("cyclic order must be at least 2, got " + std::to_string(n));
  powers_.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    // Quarter turns are stored exactly so that omega = i for n = 4, -1 for n = 2.
    if ((4 * k) % n == 0) {
      static constexpr Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      powers_[static_cast<std::size_t>(k)] = quarter[(4 * k) / n];
      continue;
    }
    const double angle = 2.0 * std::numbers::pi * k / n;
    powers_[static_cast<std::size_t>(k)] = {std::cos(angle), std::sin(angle)};
  }
}

CyclicContext make_context(int n) { return CyclicContext(n); }

AlphaRoot alpha_root(Complex alpha, int n, int branch) {
  if (n < 2) throw std::invalid_argument("alpha_root: order must be at least 2");
  if (!is_finite(alpha)) throw std::invalid_argument("alpha_root: alpha is not finite");
  const CyclicContext ctx(n);
  Complex principal{};
  if (alpha != Complex{}) {
    principal = std::polar(std::pow(std::abs(alpha), 1.0 / n), std::arg(alpha) / n);
  }
  const int b = zmod(branch, n);
  return AlphaRoot{alpha, principal * ctx.omega_pow(b), n, b};
}

TruncatedSeries project_series(const TruncatedSeries& s, const CyclicContext& ctx, int k, const AlphaRoot& a) {
  const int n = ctx.order();
  if (a.order != n) throw std::invalid_argument("project_series: root order does not match context");
  const int cls = zmod(k, n);
  const bool zero_alpha = a.alpha == Complex{};

  std::vector<Complex> out(s.coeffs().size());
  for (int deg = s.min_deg(); deg <= s.max_deg(); ++deg) {
    if (zmod(deg, n) != cls) continue;
    const Complex c = s.coeff(deg);
    if (c == Complex{}) continue;
    const std::int64_t m = (static_cast<std::int64_t>(deg) - cls) / n;
    Complex weight;
    if (zero_alpha) {
      if (m < 0) throw std::invalid_argument("project_series: alpha = 0 with negative-degree terms below class");
      weight = m == 0 ? Complex{1.0, 0.0} : Complex{};
    } else {
      weight = ipow(a.alpha, m);
    }
    out[static_cast<std::size_t>(deg - s.min_deg())] = weight * c;
  }

  const double mod = std::abs(a.root);
  const double radius = mod == 0.0 ? s.domain().max_abs_arg : s.domain().max_abs_arg / mod;
  return TruncatedSeries(s.min_deg(), std::move(out), EvalDomain{radius}, s.label());
}

Complex project_pointwise(const Evaluator& f, const CyclicContext& ctx, int k, const AlphaRoot& a, Complex z) {
  if (a.order != ctx.order()) throw std::invalid_argument("project_pointwise: root order does not match context");
  if (a.alpha == Complex{}) {
    throw std::invalid_argument("project_pointwise: alpha = 0 has no closed form; use the coefficient sieve");
  }
  const int n = ctx.order();
  const int cls = zmod(k, n);
  Complex acc{};
  for (int j = 0; j < n; ++j) {
    acc += ctx.omega_pow(-static_cast<std::int64_t>(j) * cls) * f(ctx.omega_pow(j) * a.root * z);
  }
  return acc * ipow(a.root, -cls) / static_cast<double>(n);
}

TruncatedSeries omega_scale(const TruncatedSeries& s, const CyclicContext& ctx) {
  std::vector<Complex> out(s.coeffs().begin(), s.coeffs().end());
  for (int deg = s.min_deg(); deg <= s.max_deg(); ++deg) {
    out[static_cast<std::size_t>(deg - s.min_deg())] *= ctx.omega_pow(deg);
  }
  return TruncatedSeries(s.min_deg(), std::move(out), s.domain(), s.label());
}

}  // namespace cyclofun
