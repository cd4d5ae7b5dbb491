#include "cyclofun/hyperbolic.hpp"

#include <stdexcept>
#include <string>

namespace cyclofun {

HyperbolicFamily::HyperbolicFamily(CyclicContext ctx, AlphaRoot root, TruncatedSeries base, Closed closed)
    : ctx_(std::move(ctx)), root_(root), base_(std::move(base)), closed_(closed) {
  if (root_.order != ctx_.order()) throw std::invalid_argument("HyperbolicFamily: root order does not match context");
  components_.reserve(static_cast<std::size_t>(ctx_.order()));
  for (int s = 0; s < ctx_.order(); ++s) {
    components_.push_back(project_series(base_, ctx_, s, root_).with_label("h_" + std::to_string(s)));
  }
}

std::vector<Complex> HyperbolicFamily::values(Complex z) const {
  std::vector<Complex> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(evaluate(c, z));
  return out;
}

HyperbolicFamily build_family(int n, const AlphaRoot& a, int N) {
  if (N < n) throw std::invalid_argument("build_family: truncation must be at least the order");
  return HyperbolicFamily(CyclicContext(n), a, series_exp(N), HyperbolicFamily::Closed::library_exp);
}

Complex h_eval(const HyperbolicFamily& fam, int s, Complex z, EvalMethod method) {
  const auto& component = fam.component(s);
  if (method == EvalMethod::series) return evaluate(component, z);

  if (fam.root().alpha == Complex{}) throw std::invalid_argument("h_eval: closed form undefined at alpha = 0");
  if (std::abs(z) > component.domain().max_abs_arg) {
    throw std::domain_error("h_eval: |z| outside evaluation disk");
  }
  if (fam.closed_kind() == HyperbolicFamily::Closed::library_exp) {
    return project_pointwise([](Complex w) { return std::exp(w); }, fam.context(), s, fam.root(), z);
  }
  const auto& base = fam.base();
  return project_pointwise([&base](Complex w) { return evaluate(base, w); }, fam.context(), s, fam.root(), z);
}

Complex g_eval(const CyclicContext& ctx, const AlphaRoot& a, int l, Complex z) {
  if (a.alpha == Complex{}) throw std::invalid_argument("g_eval: closed form undefined at alpha = 0");
  if (std::abs(a.root * z) > kGeometricDomain) throw std::domain_error("g_eval: |r z| exceeds 0.9");
  return project_pointwise([](Complex w) { return 1.0 / (1.0 - w); }, ctx, l, a, z);
}

TruncatedSeries laurent_component(const TruncatedSeries& s, const CyclicContext& ctx, const AlphaRoot& a, int l) {
  return project_series(s, ctx, l, a).with_label("L_" + std::to_string(zmod(l, ctx.order())) + "^alpha");
}

}  // namespace cyclofun
