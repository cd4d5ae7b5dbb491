#pragma once

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclofun/types.hpp"

namespace cyclofun {

/// Truncation order used for entire-function generator series.
inline constexpr int kDefaultTruncation = 64;
/// Highest degree a product window may reach.
inline constexpr int kProductDegreeCap = 256;

inline constexpr double kEntireDomain = 4.0;
inline constexpr double kGeometricDomain = 0.9;

/// Disk |z| <= max_abs_arg on which a truncated series may be evaluated.
struct EvalDomain {
  double max_abs_arg = kEntireDomain;
};

/// Finite window of Laurent coefficients a_k, k in [min_deg, max_deg].
/// Coefficients outside the window are zero.
class TruncatedSeries {
 public:
  TruncatedSeries(int min_deg, std::vector<Complex> coeffs, EvalDomain domain = {},
                  std::string label = {});

  int min_deg() const noexcept { return min_deg_; }
  int max_deg() const noexcept { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const EvalDomain& domain() const noexcept { return domain_; }
  const std::string& label() const noexcept { return label_; }

  /// a_degree, or zero outside the window.
  Complex coeff(int degree) const noexcept;

  TruncatedSeries with_label(std::string label) const;
  TruncatedSeries with_domain(EvalDomain domain) const;

  /// True when some coefficient of negative degree is nonzero.
  bool has_negative_terms() const noexcept;

 private:
  int min_deg_;
  std::vector<Complex> coeffs_;
  EvalDomain domain_;
  std::string label_;
};

/// Builds a series from (degree, value) pairs; gaps inside the window are zero.
/// Throws std::invalid_argument on duplicate degrees, non-finite values or empty input.
TruncatedSeries make_series(std::span<const std::pair<int, Complex>> terms);

/// exp truncated at degree N: a_k = 1/k!.
TruncatedSeries series_exp(int N = kDefaultTruncation);

/// 1/(1-z) truncated at degree N, evaluable on |z| <= 0.9.
TruncatedSeries series_geometric(int N = kDefaultTruncation);

/// (S(lambda) s)(z) = s(lambda z), i.e. a_k -> a_k lambda^k.
TruncatedSeries scale_argument(const TruncatedSeries& s, Complex lambda);

/// Sum of a_k z^k. Throws std::domain_error outside the evaluation disk or at
/// z = 0 when negative-degree terms are present.
Complex evaluate(const TruncatedSeries& s, Complex z);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scalar_mul(const TruncatedSeries& s, Complex c);
/// Cauchy product; the window is cut at degree kProductDegreeCap.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Keeps degrees <= max_deg (window shrinks, never grows).
TruncatedSeries truncate(const TruncatedSeries& s, int max_deg);

/// a_k z^k -> k a_k z^(k-1).
TruncatedSeries series_derivative(const TruncatedSeries& s);

/// Largest |a_k - b_k| over the union of windows.
double max_coeff_diff(const TruncatedSeries& a, const TruncatedSeries& b);

/// Largest |a_k - b_k| / max(1, |a_k|, |b_k|) over the union of windows.
double max_coeff_residual(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace cyclofun
