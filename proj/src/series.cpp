#include "cyclofun/series.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyclofun {

TruncatedSeries::TruncatedSeries(int min_deg, std::vector<Complex> coeffs, EvalDomain domain,
                                 std::string label)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)), domain_(domain), label_(std::move(label)) {
  if (coeffs_.empty()) throw std::invalid_argument("series window must hold at least one coefficient");
  for (const auto& c : coeffs_) {
    if (!is_finite(c)) throw std::invalid_argument("series coefficient is not finite");
  }
  if (!(domain_.max_abs_arg >= 0.0)) throw std::invalid_argument("evaluation radius must be nonnegative");
}

Complex TruncatedSeries::coeff(int degree) const noexcept {
  if (degree < min_deg_ || degree > max_deg()) return {};
  return coeffs_[static_cast<std::size_t>(degree - min_deg_)];
}

TruncatedSeries TruncatedSeries::with_label(std::string label) const {
  TruncatedSeries out = *this;
  out.label_ = std::move(label);
  return out;
}

TruncatedSeries TruncatedSeries::with_domain(EvalDomain domain) const {
  TruncatedSeries out = *this;
  out.domain_ = domain;
  return out;
}

bool TruncatedSeries::has_negative_terms() const noexcept {
  for (int k = min_deg_; k < 0 && k <= max_deg(); ++k) {
    if (coeff(k) != Complex{}) return true;
  }
  return false;
}

TruncatedSeries make_series(std::span<const std::pair<int, Complex>> terms) {
  if (terms.empty()) throw std::invalid_argument("make_series: no terms supplied");
  std::map<int, Complex> by_degree;
  for (const auto& [deg, value] : terms) {
    if (!is_finite(value)) throw std::invalid_argument("make_series: non-finite value at degree " + std::to_string(deg));
    if (!by_degree.emplace(deg, value).second) {
      throw std::invalid_argument("make_series: duplicate degree " + std::to_string(deg));
    }
  }
  const int lo = by_degree.begin()->first;
  const int hi = by_degree.rbegin()->first;
  std::vector<Complex> coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [deg, value] : by_degree) coeffs[static_cast<std::size_t>(deg - lo)] = value;
  return TruncatedSeries(lo, std::move(coeffs));
}

TruncatedSeries series_exp(int N) {
  if (N < 0) throw std::invalid_argument("series_exp: negative truncation order");
  std::vector<Complex> coeffs(static_cast<std::size_t>(N) + 1);
  double inv_fact = 1.0;
  for (int k = 0; k <= N; ++k) {
    if (k > 0) inv_fact /= k;
    coeffs[static_cast<std::size_t>(k)] = inv_fact;
  }
  return TruncatedSeries(0, std::move(coeffs), EvalDomain{kEntireDomain}, "exp");
}

TruncatedSeries series_geometric(int N) {
  if (N < 0) throw std::invalid_argument("series_geometric: negative truncation order");
  return TruncatedSeries(0, std::vector<Complex>(static_cast<std::size_t>(N) + 1, Complex{1.0, 0.0}),
                         EvalDomain{kGeometricDomain}, "geometric");
}

TruncatedSeries scale_argument(const TruncatedSeries& s, Complex lambda) {
  if (!is_finite(lambda)) throw std::invalid_argument("scale_argument: non-finite scale");
  if (lambda == Complex{} && s.has_negative_terms()) {
    throw std::invalid_argument("scale_argument: zero scale with negative-degree terms");
  }
  std::vector<Complex> out(s.coeffs().begin(), s.coeffs().end());
  for (int k = s.min_deg(); k <= s.max_deg(); ++k) {
    auto& c = out[static_cast<std::size_t>(k - s.min_deg())];
    if (c == Complex{}) continue;
    c *= ipow(lambda, k);
  }
  const double mod = std::abs(lambda);
  const double radius = mod == 0.0 ? std::numeric_limits<double>::infinity() : s.domain().max_abs_arg / mod;
  return TruncatedSeries(s.min_deg(), std::move(out), EvalDomain{radius}, s.label());
}

Complex evaluate(const TruncatedSeries& s, Complex z) {
  if (!is_finite(z)) throw std::domain_error("evaluate: non-finite argument");
  if (std::abs(z) > s.domain().max_abs_arg) {
    throw std::domain_error("evaluate: |z| = " + std::to_string(std::abs(z)) +
                            " outside evaluation disk of radius " + std::to_string(s.domain().max_abs_arg));
  }
  const int lo = s.min_deg();
  const int hi = s.max_deg();

  // Nonnegative degrees: Horner in z over [max(lo,0), hi], then shift.
  Complex pos{};
  if (hi >= 0) {
    const int start = std::max(lo, 0);
    for (int k = hi; k >= start; --k) pos = pos * z + s.coeff(k);
    if (start > 0) pos *= ipow(z, start);
  }
  // Negative degrees: Horner in 1/z over [lo, min(hi,-1)].
  Complex neg{};
  if (lo < 0 && s.has_negative_terms()) {
    if (z == Complex{}) throw std::domain_error("evaluate: z = 0 with negative-degree terms");
    const Complex w = 1.0 / z;
    const int stop = std::min(hi, -1);
    for (int k = lo; k <= stop; ++k) neg = neg * w + s.coeff(k);
    neg *= ipow(w, -stop);
  }
  return pos + neg;
}

namespace {

TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, Complex sign) {
  const int lo = std::min(a.min_deg(), b.min_deg());
  const int hi = std::max(a.max_deg(), b.max_deg());
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1));
  for (int k = lo; k <= hi; ++k) out[static_cast<std::size_t>(k - lo)] = a.coeff(k) + sign * b.coeff(k);
  const double radius = std::min(a.domain().max_abs_arg, b.domain().max_abs_arg);
  return TruncatedSeries(lo, std::move(out), EvalDomain{radius});
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  return combine(a, b, Complex{1.0, 0.0});
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return combine(a, b, Complex{-1.0, 0.0});
}

TruncatedSeries series_scalar_mul(const TruncatedSeries& s, Complex c) {
  if (!is_finite(c)) throw std::invalid_argument("series_scalar_mul: non-finite scalar");
  std::vector<Complex> out(s.coeffs().begin(), s.coeffs().end());
  for (auto& v : out) v *= c;
  return TruncatedSeries(s.min_deg(), std::move(out), s.domain(), s.label());
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int lo = a.min_deg() + b.min_deg();
  const int hi = std::max(lo, std::min(a.max_deg() + b.max_deg(), kProductDegreeCap));
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1));
  for (int i = a.min_deg(); i <= a.max_deg(); ++i) {
    const Complex ai = a.coeff(i);
    if (ai == Complex{}) continue;
    for (int j = b.min_deg(); j <= b.max_deg() && i + j <= hi; ++j) {
      out[static_cast<std::size_t>(i + j - lo)] += ai * b.coeff(j);
    }
  }
  const double radius = std::min(a.domain().max_abs_arg, b.domain().max_abs_arg);
  return TruncatedSeries(lo, std::move(out), EvalDomain{radius});
}

TruncatedSeries truncate(const TruncatedSeries& s, int max_deg) {
  if (max_deg >= s.max_deg()) return s;
  if (max_deg < s.min_deg()) return TruncatedSeries(s.min_deg(), {Complex{}}, s.domain(), s.label());
  auto first = s.coeffs().begin();
  std::vector<Complex> out(first, first + (max_deg - s.min_deg() + 1));
  return TruncatedSeries(s.min_deg(), std::move(out), s.domain(), s.label());
}

TruncatedSeries series_derivative(const TruncatedSeries& s) {
  // The constant term drops; keep at least one slot so the window stays valid.
  if (s.min_deg() == 0 && s.max_deg() == 0) return TruncatedSeries(0, {Complex{}}, s.domain());
  std::vector<Complex> out;
  out.reserve(s.coeffs().size());
  for (int k = s.min_deg(); k <= s.max_deg(); ++k) out.push_back(static_cast<double>(k) * s.coeff(k));
  return TruncatedSeries(s.min_deg() - 1, std::move(out), s.domain());
}

double max_coeff_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int lo = std::min(a.min_deg(), b.min_deg());
  const int hi = std::max(a.max_deg(), b.max_deg());
  double worst = 0.0;
  for (int k = lo; k <= hi; ++k) worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
  return worst;
}

double max_coeff_residual(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int lo = std::min(a.min_deg(), b.min_deg());
  const int hi = std::max(a.max_deg(), b.max_deg());
  double worst = 0.0;
  for (int k = lo; k <= hi; ++k) worst = std::max(worst, mixed_residual(a.coeff(k), b.coeff(k)));
  return worst;
}

}  // namespace cyclofun
