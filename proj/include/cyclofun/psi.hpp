#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cyclofun/cyclic.hpp"
#include "cyclofun/hyperbolic.hpp"
#include "cyclofun/report.hpp"
#include "cyclofun/series.hpp"

namespace cyclofun {

/// q-number n_q = 1 + q + ... + q^{n-1} (= (1 - q^n)/(1 - q)); for negative n,
/// n_q = -q^n (-n)_q. 0_q = 0.
Complex q_number(int n, Complex q);

/// A psi-deformation: the psi-numbers n_psi for n = 1..cap, with factorials,
/// reciprocal factorials (the weights psi_n = 1/n_psi!) and binomials built
/// once at construction.
class PsiSequence {
 public:
  enum class Kind { q_deformed, explicit_numbers, classical };

  /// n_psi = n_q. Rejects q = 1 and q with n_q = 0 for some n <= cap.
  static PsiSequence q_deformed(Complex q, int cap = kProductDegreeCap);
  /// n_psi = numbers[n-1]; every entry must be finite and nonzero.
  static PsiSequence explicit_numbers(std::vector<Complex> numbers);
  /// n_psi = n, the undeformed case.
  static PsiSequence classical(int cap = kProductDegreeCap);

  Kind kind() const noexcept { return kind_; }
  std::optional<Complex> q() const noexcept { return q_; }
  int cap() const noexcept { return static_cast<int>(numbers_.size()) - 1; }

  /// n_psi; 0_psi = 0.
  Complex number(int n) const;
  /// n_psi!; may overflow to infinity for fast-growing sequences.
  Complex factorial(int n) const;
  /// 1/n_psi! = psi_n.
  Complex inverse_factorial(int n) const;
  /// n_psi (n-1)_psi ... (n-k+1)_psi / k_psi!, as a product of ratios.
  Complex binomial(int n, int k) const;

  /// Radius (capped at 4) on which exp_psi truncated at the cap is trusted.
  double exp_radius() const noexcept;

 private:
  PsiSequence(Kind kind, std::optional<Complex> q, std::vector<Complex> numbers);

  Kind kind_;
  std::optional<Complex> q_;
  std::vector<Complex> numbers_;        // index n -> n_psi
  std::vector<Complex> factorials_;     // index n -> n_psi!
  std::vector<Complex> inv_factorials_; // index n -> 1/n_psi!
};

Complex psi_number(const PsiSequence& ps, int n);
Complex psi_factorial(const PsiSequence& ps, int n);
Complex psi_binomial(const PsiSequence& ps, int n, int k);

/// Dense polynomial, coefficients in ascending degree. Trailing exact zeros
/// are trimmed; the zero polynomial holds a single 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{}} {}
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial monomial(int degree, Complex c = 1.0);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex coeff(int k) const noexcept;
  Complex operator()(Complex x) const noexcept;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex c, const Polynomial& p);

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

/// Largest |a_k - b_k| / max(1, |a_k|, |b_k|).
double max_coeff_residual(const Polynomial& a, const Polynomial& b);

TruncatedSeries to_series(const Polynomial& p);
/// Throws std::invalid_argument when the series has negative-degree terms.
Polynomial to_polynomial(const TruncatedSeries& s);

/// Jackson derivative, coefficient rule a_k -> k_q a_k at degree k-1.
/// Throws std::invalid_argument for q = 1.
TruncatedSeries jackson_derivative(const TruncatedSeries& s, Complex q);
Polynomial jackson_derivative(const Polynomial& p, Complex q);

/// (f(x) - f(qx)) / ((1 - q) x), evaluated directly.
Complex jackson_difference_quotient(const TruncatedSeries& s, Complex q, Complex x);

/// psi-derivative x^k -> k_psi x^{k-1}. Rejects negative-degree terms.
TruncatedSeries psi_derivative(const TruncatedSeries& s, const PsiSequence& ps);
Polynomial psi_derivative(const Polynomial& p, const PsiSequence& ps);

/// exp_psi truncated at N: a_k = 1/k_psi!.
TruncatedSeries series_exp_psi(const PsiSequence& ps, int N = kDefaultTruncation);

/// h_{psi,s}^alpha = Pi_s^alpha exp_psi. The closed path evaluates the
/// omega-sum over the exp_psi series.
HyperbolicFamily build_psi_hyperbolic(const PsiSequence& ps, const CyclicContext& ctx, const AlphaRoot& a,
                                      int N = kDefaultTruncation);

/// Basic polynomial sequence of the lowering operator -(d_q + d_q^2 + ...):
/// L_{n,q}(x) = sum_{k=1}^n (-1)^k (n_q!/k_q!) C(n-1, k-1) x^k, L_{0,q} = 1.
Polynomial q_laguerre(int n, Complex q);

/// The q-Laguerre expression with q-binomial and the extra n_q/n, k/k_q
/// factors. Kept for comparison; it does not satisfy the lowering relation
/// for n >= 2.
Polynomial q_laguerre_as_printed(int n, Complex q);

/// -sum_{j=1}^K d_q^j p. Requires K >= deg p.
Polynomial lowering_operator_apply(const Polynomial& p, Complex q, int K);

/// E^y(d_psi) p = sum_k y^k / k_psi! d_psi^k p.
Polynomial generalized_translation(const Polynomial& p, Complex y, const PsiSequence& ps);

/// Max residual over n of E^y(d_psi) p_n (x) against
/// sum_k C(n,k)_psi p_k(x) p_{n-k}(y), for every p_n in the family.
IdentityReport verify_psi_binomial(std::span<const Polynomial> family, const PsiSequence& ps, Complex x, Complex y,
                                   double tolerance = 1e-11);

/// Generating function with A = 1, g = id:
/// sum_{n<=N} psi_n (Pi_s^alpha p_n)(x) z^n against h_{psi,s}^alpha(x z).
IdentityReport verify_generating_function(std::span<const Polynomial> family, const PsiSequence& ps,
                                          const AlphaRoot& a, const CyclicContext& ctx, int s, Complex x, Complex z,
                                          int N, double tolerance = 1e-9);

/// p_n(x) = x^n for n = 0..N.
std::vector<Polynomial> monomial_family(int N);

}  // namespace cyclofun
