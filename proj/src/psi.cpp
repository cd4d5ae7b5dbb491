#include "cyclofun/psi.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclofun {

Complex q_number(int n, Complex q) {
  if (n == 0) return {};
  if (n < 0) return -ipow(q, n) * q_number(-n, q);
  // Horner form of 1 + q + ... + q^{n-1}; no cancellation near q = 1.
  Complex acc{1.0, 0.0};
  for (int j = 1; j < n; ++j) acc = 1.0 + q * acc;
  return acc;
}

PsiSequence::PsiSequence(Kind kind, std::optional<Complex> q, std::vector<Complex> numbers)
    : kind_(kind), q_(q), numbers_(std::move(numbers)) {
  const std::size_t size = numbers_.size();
  factorials_.assign(size, Complex{1.0, 0.0});
  inv_factorials_.assign(size, Complex{1.0, 0.0});
  for (std::size_t n = 1; n < size; ++n) {
    const Complex v = numbers_[n];
    if (!is_finite(v) || std::abs(v) == 0.0) {
      throw std::invalid_argument("psi-number " + std::to_string(n) + "_psi must be finite and nonzero");
    }
    factorials_[n] = factorials_[n - 1] * v;
    inv_factorials_[n] = inv_factorials_[n - 1] / v;
  }
}

PsiSequence PsiSequence::q_deformed(Complex q, int cap) {
  if (!is_finite(q)) throw std::invalid_argument("q must be finite");
  if (q == Complex{1.0, 0.0}) throw std::invalid_argument("q = 1 is the classical case; use PsiSequence::classical");
  if (cap < 1) throw std::invalid_argument("psi cap must be positive");
  std::vector<Complex> numbers(static_cast<std::size_t>(cap) + 1);
  Complex acc{};
  for (int n = 1; n <= cap; ++n) {
    acc = 1.0 + q * acc;  // n_q = 1 + q (n-1)_q
    // n_q = 0 exactly when q is a nontrivial root of unity of order dividing n.
    if (std::abs(acc) <= 1e-12 * std::max(1.0, std::abs(ipow(q, n - 1)))) {
      throw std::invalid_argument("q is a root of unity: " + std::to_string(n) + "_q vanishes");
    }
    numbers[static_cast<std::size_t>(n)] = acc;
  }
  return PsiSequence(Kind::q_deformed, q, std::move(numbers));
}

PsiSequence PsiSequence::explicit_numbers(std::vector<Complex> numbers) {
  if (numbers.empty()) throw std::invalid_argument("explicit psi sequence needs at least one number");
  numbers.insert(numbers.begin(), Complex{});
  return PsiSequence(Kind::explicit_numbers, std::nullopt, std::move(numbers));
}

PsiSequence PsiSequence::classical(int cap) {
  if (cap < 1) throw std::invalid_argument("psi cap must be positive");
  std::vector<Complex> numbers(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) numbers[static_cast<std::size_t>(n)] = static_cast<double>(n);
  return PsiSequence(Kind::classical, std::nullopt, std::move(numbers));
}

namespace {

void check_index(const PsiSequence& ps, int n) {
  if (n < 0 || n > ps.cap()) {
    throw std::out_of_range("psi index " + std::to_string(n) + " outside [0, " + std::to_string(ps.cap()) + "]");
  }
}

}  // namespace

Complex PsiSequence::number(int n) const {
  check_index(*this, n);
  return numbers_[static_cast<std::size_t>(n)];
}

Complex PsiSequence::factorial(int n) const {
  check_index(*this, n);
  return factorials_[static_cast<std::size_t>(n)];
}

Complex PsiSequence::inverse_factorial(int n) const {
  check_index(*this, n);
  return inv_factorials_[static_cast<std::size_t>(n)];
}

Complex PsiSequence::binomial(int n, int k) const {
  check_index(*this, n);
  if (k < 0 || k > n) throw std::out_of_range("psi binomial needs 0 <= k <= n");
  k = std::min(k, n - k);
  Complex acc{1.0, 0.0};
  for (int i = 0; i < k; ++i) {
    acc *= numbers_[static_cast<std::size_t>(n - i)] / numbers_[static_cast<std::size_t>(k - i)];
  }
  return acc;
}

double PsiSequence::exp_radius() const noexcept {
  // Ratio test: a_n / a_{n+1} = (n+1)_psi, read off at the top of the table.
  const double tail = std::abs(numbers_.back());
  return std::min(kEntireDomain, 0.9 * tail);
}

Complex psi_number(const PsiSequence& ps, int n) { return ps.number(n); }
Complex psi_factorial(const PsiSequence& ps, int n) { return ps.factorial(n); }
Complex psi_binomial(const PsiSequence& ps, int n, int k) { return ps.binomial(n, k); }

// -- Polynomial -------------------------------------------------------------

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!is_finite(c)) throw std::invalid_argument("polynomial coefficient is not finite");
  }
  trim();
}

Polynomial Polynomial::monomial(int degree, Complex c) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<Complex> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Complex{});
}

Complex Polynomial::coeff(int k) const noexcept {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::operator()(Complex x) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> out(static_cast<std::size_t>(std::max(a.degree(), b.degree())) + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Complex{-1.0, 0.0} * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> out(static_cast<std::size_t>(a.degree() + b.degree()) + 1);
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) out[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(Complex c, const Polynomial& p) {
  std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

double max_coeff_residual(const Polynomial& a, const Polynomial& b) {
  double worst = 0.0;
  for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k) {
    worst = std::max(worst, mixed_residual(a.coeff(k), b.coeff(k)));
  }
  return worst;
}

TruncatedSeries to_series(const Polynomial& p) {
  return TruncatedSeries(0, std::vector<Complex>(p.coeffs().begin(), p.coeffs().end()));
}

Polynomial to_polynomial(const TruncatedSeries& s) {
  if (s.has_negative_terms()) throw std::invalid_argument("series has negative-degree terms");
  std::vector<Complex> out(static_cast<std::size_t>(std::max(s.max_deg(), 0)) + 1);
  for (int k = 0; k <= s.max_deg(); ++k) out[static_cast<std::size_t>(k)] = s.coeff(k);
  return Polynomial(std::move(out));
}

// -- derivatives --------------------------------------------------------------

namespace {

template <typename NumberFn>
TruncatedSeries lower_by(const TruncatedSeries& s, NumberFn number) {
  if (s.min_deg() == 0 && s.max_deg() == 0) return TruncatedSeries(0, {Complex{}}, s.domain());
  std::vector<Complex> out;
  out.reserve(s.coeffs().size());
  for (int k = s.min_deg(); k <= s.max_deg(); ++k) {
    const Complex c = s.coeff(k);
    out.push_back(c == Complex{} ? Complex{} : number(k) * c);
  }
  return TruncatedSeries(s.min_deg() - 1, std::move(out), s.domain());
}

}  // namespace

TruncatedSeries jackson_derivative(const TruncatedSeries& s, Complex q) {
  if (q == Complex{1.0, 0.0}) throw std::invalid_argument("jackson_derivative: q = 1, use series_derivative");
  return lower_by(s, [q](int k) { return q_number(k, q); });
}

Polynomial jackson_derivative(const Polynomial& p, Complex q) {
  return to_polynomial(truncate(jackson_derivative(to_series(p), q), std::max(p.degree() - 1, 0)));
}

Complex jackson_difference_quotient(const TruncatedSeries& s, Complex q, Complex x) {
  if (q == Complex{1.0, 0.0}) throw std::invalid_argument("jackson_difference_quotient: q = 1");
  if (x == Complex{}) throw std::domain_error("jackson_difference_quotient: x = 0");
  return (evaluate(s, x) - evaluate(s, q * x)) / ((1.0 - q) * x);
}

TruncatedSeries psi_derivative(const TruncatedSeries& s, const PsiSequence& ps) {
  if (s.has_negative_terms()) throw std::invalid_argument("psi_derivative: negative-degree terms present");
  if (s.max_deg() < 0) return TruncatedSeries(0, {Complex{}}, s.domain());
  const TruncatedSeries trimmed = s.min_deg() < 0 ? to_series(to_polynomial(s)).with_domain(s.domain()) : s;
  if (trimmed.max_deg() > ps.cap()) throw std::out_of_range("psi_derivative: degree exceeds psi cap");
  return lower_by(trimmed, [&ps](int k) { return ps.number(k); });
}

Polynomial psi_derivative(const Polynomial& p, const PsiSequence& ps) {
  return to_polynomial(truncate(psi_derivative(to_series(p), ps), std::max(p.degree() - 1, 0)));
}

TruncatedSeries series_exp_psi(const PsiSequence& ps, int N) {
  if (N < 0 || N > ps.cap()) throw std::out_of_range("series_exp_psi: truncation outside psi cap");
  std::vector<Complex> coeffs(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) coeffs[static_cast<std::size_t>(k)] = ps.inverse_factorial(k);
  return TruncatedSeries(0, std::move(coeffs), EvalDomain{ps.exp_radius()}, "exp_psi");
}

HyperbolicFamily build_psi_hyperbolic(const PsiSequence& ps, const CyclicContext& ctx, const AlphaRoot& a, int N) {
  if (N < ctx.order()) throw std::invalid_argument("build_psi_hyperbolic: truncation must be at least the order");
  return HyperbolicFamily(ctx, a, series_exp_psi(ps, N), HyperbolicFamily::Closed::base_series);
}

// -- q-Laguerre basic sequence --------------------------------------------------

namespace {

double binomial_coefficient(int n, int k) {
  double acc = 1.0;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

void check_laguerre_args(int n, Complex q) {
  if (n < 0) throw std::invalid_argument("q_laguerre: negative index");
  if (q == Complex{1.0, 0.0}) throw std::invalid_argument("q_laguerre: q = 1");
}

}  // namespace

Polynomial q_laguerre(int n, Complex q) {
  check_laguerre_args(n, q);
  if (n == 0) return Polynomial({Complex{1.0, 0.0}});
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  // n_q!/k_q! = (k+1)_q ... n_q, accumulated downward from k = n.
  Complex ratio{1.0, 0.0};
  for (int k = n; k >= 1; --k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    c[static_cast<std::size_t>(k)] = sign * ratio * binomial_coefficient(n - 1, k - 1);
    ratio *= q_number(k, q);
  }
  return Polynomial(std::move(c));
}

Polynomial q_laguerre_as_printed(int n, Complex q) {
  check_laguerre_args(n, q);
  if (n == 0) return Polynomial({Complex{1.0, 0.0}});
  const auto ps = PsiSequence::q_deformed(q, std::max(n, 1));
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  const Complex nq = ps.number(n);
  for (int k = 1; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const Complex ratio = ps.factorial(n) / ps.factorial(k);
    const Complex qbinom = n - 1 >= k - 1 ? ps.binomial(n - 1, k - 1) : Complex{};
    c[static_cast<std::size_t>(k)] =
        (nq / static_cast<double>(n)) * sign * ratio * qbinom * (static_cast<double>(k) / ps.number(k));
  }
  return Polynomial(std::move(c));
}

Polynomial lowering_operator_apply(const Polynomial& p, Complex q, int K) {
  if (K < p.degree()) throw std::invalid_argument("lowering_operator_apply: K must be at least deg p");
  Polynomial acc;
  Polynomial d = p;
  for (int j = 1; j <= K; ++j) {
    d = jackson_derivative(d, q);
    acc = acc - d;
    if (d.is_zero()) break;
  }
  return acc;
}

Polynomial generalized_translation(const Polynomial& p, Complex y, const PsiSequence& ps) {
  if (p.degree() > ps.cap()) throw std::out_of_range("generalized_translation: degree exceeds psi cap");
  Polynomial acc = p;
  Polynomial d = p;
  Complex ypow{1.0, 0.0};
  for (int k = 1; k <= p.degree(); ++k) {
    d = psi_derivative(d, ps);
    ypow *= y;
    acc = acc + (ypow * ps.inverse_factorial(k)) * d;
  }
  return acc;
}

namespace {

void check_family(std::span<const Polynomial> family) {
  if (family.empty()) throw std::invalid_argument("polynomial family is empty");
  for (std::size_t n = 0; n < family.size(); ++n) {
    if (family[n].degree() != static_cast<int>(n) || family[n].coeff(static_cast<int>(n)) == Complex{}) {
      throw std::invalid_argument("family member " + std::to_string(n) + " must have degree " + std::to_string(n));
    }
  }
  if (family[0].coeff(0) != Complex{1.0, 0.0}) throw std::invalid_argument("family must start with p_0 = 1");
}

std::string kind_name(const PsiSequence& ps) {
  switch (ps.kind()) {
    case PsiSequence::Kind::q_deformed: return "q";
    case PsiSequence::Kind::explicit_numbers: return "explicit";
    case PsiSequence::Kind::classical: return "classical";
  }
  return "unknown";
}

}  // namespace

IdentityReport verify_psi_binomial(std::span<const Polynomial> family, const PsiSequence& ps, Complex x, Complex y,
                                   double tolerance) {
  check_family(family);
  const auto size = static_cast<int>(family.size());
  std::vector<Complex> at_x(family.size()), at_y(family.size());
  for (int n = 0; n < size; ++n) {
    at_x[static_cast<std::size_t>(n)] = family[static_cast<std::size_t>(n)](x);
    at_y[static_cast<std::size_t>(n)] = family[static_cast<std::size_t>(n)](y);
  }
  double worst = 0.0;
  for (int n = 0; n < size; ++n) {
    const Complex translated = generalized_translation(family[static_cast<std::size_t>(n)], y, ps)(x);
    Complex convolution{};
    for (int k = 0; k <= n; ++k) {
      convolution += ps.binomial(n, k) * at_x[static_cast<std::size_t>(k)] * at_y[static_cast<std::size_t>(n - k)];
    }
    worst = std::max(worst, mixed_residual(translated, convolution));
  }
  OrderedJson p = OrderedJson::object();
  p["psi"] = kind_name(ps);
  if (ps.q()) p["q"] = complex_json(*ps.q());
  p["max_degree"] = size - 1;
  p["x"] = complex_json(x);
  p["y"] = complex_json(y);
  return make_report("psi_binomial", std::move(p), worst, tolerance);
}

IdentityReport verify_generating_function(std::span<const Polynomial> family, const PsiSequence& ps,
                                          const AlphaRoot& a, const CyclicContext& ctx, int s, Complex x, Complex z,
                                          int N, double tolerance) {
  check_family(family);
  if (static_cast<int>(family.size()) <= N) throw std::invalid_argument("family shorter than the truncation order");

  // Left: sieve each p_n in its x-degree, weight by psi_n = 1/n_psi!.
  Complex lhs{};
  Complex zpow{1.0, 0.0};
  for (int n = 0; n <= N; ++n) {
    const auto projected = project_series(to_series(family[static_cast<std::size_t>(n)]), ctx, s, a);
    lhs += ps.inverse_factorial(n) * evaluate(projected, x) * zpow;
    zpow *= z;
  }

  // Right: the psi-hyperbolic component at x z, via the omega-sum when it exists.
  const auto fam = build_psi_hyperbolic(ps, ctx, a, N);
  const EvalMethod method = a.alpha == Complex{} ? EvalMethod::series : EvalMethod::closed;
  const Complex rhs = h_eval(fam, s, x * z, method);

  OrderedJson p = OrderedJson::object();
  p["n"] = ctx.order();
  p["s"] = zmod(s, ctx.order());
  p["alpha"] = complex_json(a.alpha);
  p["psi"] = kind_name(ps);
  if (ps.q()) p["q"] = complex_json(*ps.q());
  p["x"] = complex_json(x);
  p["z"] = complex_json(z);
  p["N"] = N;
  return make_report("generating_function", std::move(p), mixed_residual(lhs, rhs), tolerance);
}

std::vector<Polynomial> monomial_family(int N) {
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) out.push_back(Polynomial::monomial(n));
  return out;
}

}  // namespace cyclofun
