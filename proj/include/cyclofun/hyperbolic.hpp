#pragma once

#include <vector>

#include "cyclofun/cyclic.hpp"
#include "cyclofun/series.hpp"

namespace cyclofun {

enum class EvalMethod { series, closed };

/// The n components h_0^alpha ... h_{n-1}^alpha obtained by sieving a base
/// series (exp, or a deformed exponential) through Pi_s^alpha.
class HyperbolicFamily {
 public:
  /// Base used by the closed (omega-sum) evaluation path.
  enum class Closed { library_exp, base_series };

  HyperbolicFamily(CyclicContext ctx, AlphaRoot root, TruncatedSeries base, Closed closed);

  const CyclicContext& context() const noexcept { return ctx_; }
  const AlphaRoot& root() const noexcept { return root_; }
  int order() const noexcept { return ctx_.order(); }
  const TruncatedSeries& base() const noexcept { return base_; }
  Closed closed_kind() const noexcept { return closed_; }
  const std::vector<TruncatedSeries>& components() const noexcept { return components_; }
  const TruncatedSeries& component(int s) const { return components_.at(static_cast<std::size_t>(zmod(s, order()))); }

  /// Evaluates every component at z with the series path.
  std::vector<Complex> values(Complex z) const;

 private:
  CyclicContext ctx_;
  AlphaRoot root_;
  TruncatedSeries base_;
  Closed closed_;
  std::vector<TruncatedSeries> components_;
};

/// h_s^alpha = Pi_s^alpha exp for s in Z_n, exp truncated at N (N >= n).
HyperbolicFamily build_family(int n, const AlphaRoot& a, int N = kDefaultTruncation);

/// Series path evaluates the stored sieve; closed path evaluates
/// (1/n) r^{-s} sum_k omega^{-ks} exp(omega^k r z). Closed requires alpha != 0.
Complex h_eval(const HyperbolicFamily& fam, int s, Complex z, EvalMethod method);

/// Closed-form alpha-geometric component g_l^alpha(z) through 1/(1-w).
/// Requires alpha != 0 and |r z| <= 0.9.
Complex g_eval(const CyclicContext& ctx, const AlphaRoot& a, int l, Complex z);

/// L_l^alpha = Pi_l^alpha L for an arbitrary Laurent window.
TruncatedSeries laurent_component(const TruncatedSeries& s, const CyclicContext& ctx, const AlphaRoot& a, int l);

}  // namespace cyclofun
