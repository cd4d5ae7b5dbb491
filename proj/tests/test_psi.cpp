#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cyclofun/psi.hpp"
#include "cyclofun/suites.hpp"

using namespace cyclofun;

TEST_CASE("q-numbers") {
  const Complex q{0.3, 0.8};
  for (int n = 0; n <= 30; ++n) {
    const Complex closed = (1.0 - std::pow(q, n)) / (1.0 - q);
    CHECK(std::abs(q_number(n, q) - closed) < 1e-14);
  }
  CHECK(q_number(3, 2.0) == Complex{7.0, 0.0});
  // -q^{-2} 2_q = -(1/4)(3)
  CHECK(std::abs(q_number(-2, 2.0) - (-0.75)) < 1e-16);
  // Near q = 1 the closed form cancels; the recurrence does not.
  const Complex near{1.0 + 1e-12, 0.0};
  CHECK(std::abs(q_number(50, near) - 50.0) < 1e-8);
}

TEST_CASE("q-factorials and Gaussian binomials") {
  const auto ps = PsiSequence::q_deformed(2.0, 16);
  CHECK(ps.factorial(3) == Complex{21.0, 0.0});  // 1 * 3 * 7
  CHECK(ps.factorial(0) == Complex{1.0, 0.0});
  CHECK(std::abs(ps.inverse_factorial(3) - 1.0 / 21.0) < 1e-17);
  CHECK(std::abs(ps.binomial(4, 2) - 35.0) < 1e-13);
  CHECK(std::abs(ps.binomial(5, 2) - 155.0) < 1e-12);
  CHECK_THROWS_AS(ps.binomial(4, 5), std::out_of_range);
  CHECK(ps.binomial(6, 0) == Complex{1.0, 0.0});
}

TEST_CASE("q-deformation rejects q = 1 and roots of unity") {
  CHECK_THROWS_AS(PsiSequence::q_deformed(1.0), std::invalid_argument);
  CHECK_THROWS_AS(PsiSequence::q_deformed(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(PsiSequence::q_deformed(Complex{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PsiSequence::q_deformed(std::nan("")), std::invalid_argument);
  CHECK_NOTHROW(PsiSequence::q_deformed(0.0));
}

TEST_CASE("explicit and classical sequences") {
  const auto ps = PsiSequence::explicit_numbers({1.0, 3.0, 5.0});
  CHECK(ps.cap() == 3);
  CHECK(ps.factorial(3) == Complex{15.0, 0.0});
  CHECK(std::abs(ps.binomial(3, 1) - 5.0) < 1e-15);
  CHECK_THROWS_AS(PsiSequence::explicit_numbers({1.0, 0.0}), std::invalid_argument);
  const auto cl = PsiSequence::classical(20);
  CHECK(cl.binomial(10, 3) == Complex{120.0, 0.0});
}

TEST_CASE("Jackson derivative on monomials and against the difference quotient") {
  const Complex q{0.5, 0.0};
  const auto d = jackson_derivative(Polynomial::monomial(5), q);
  CHECK(d.degree() == 4);
  CHECK(std::abs(d.coeff(4) - q_number(5, q)) < 1e-16);

  Sampler rng(31);
  const auto f = to_series(rng.polynomial(10));
  const auto df = jackson_derivative(f, q);
  for (int i = 0; i < 16; ++i) {
    const Complex x = rng.disk() + 0.1;
    CHECK(mixed_residual(jackson_difference_quotient(f, q, x), evaluate(df, x)) < 1e-12);
  }
  CHECK_THROWS_AS(jackson_difference_quotient(f, q, 0.0), std::domain_error);
  CHECK_THROWS_AS(jackson_derivative(f, 1.0), std::invalid_argument);
}

TEST_CASE("psi-derivative with classical numbers is d/dx") {
  const auto e = series_exp(30);
  CHECK(max_coeff_residual(psi_derivative(e, PsiSequence::classical(64)), series_derivative(e)) < 1e-15);
  CHECK_THROWS_AS(psi_derivative(TruncatedSeries(-1, {1.0, 1.0}), PsiSequence::classical(8)), std::invalid_argument);
}

TEST_CASE("exp_q is a fixed point of the Jackson derivative") {
  for (const Complex q : {Complex{0.5, 0}, Complex{2, 0}, Complex{0.7, 0.4}}) {
    const auto ps = PsiSequence::q_deformed(q);
    const auto e = series_exp_psi(ps, 48);
    CHECK(max_coeff_residual(jackson_derivative(e, q), truncate(e, 47)) < 1e-13);
  }
  // coefficients 1/k_q! tend to 1/k! as q -> 1
  const auto near = series_exp_psi(PsiSequence::q_deformed(1.0 + 1e-8, 64), 64);
  CHECK(max_coeff_diff(near, series_exp(64)) < 1e-6);
}

TEST_CASE("q-Laguerre polynomials") {
  const Complex q{2.0, 0.0};
  CHECK(q_laguerre(0, q).degree() == 0);
  // L_1 = -x, L_2 = x^2 - (1+q) x
  CHECK(max_coeff_residual(q_laguerre(1, q), Polynomial({0.0, -1.0})) == 0.0);
  CHECK(max_coeff_residual(q_laguerre(2, q), Polynomial({0.0, -3.0, 1.0})) == 0.0);

  for (const Complex qq : {Complex{0.5, 0}, Complex{2, 0}, Complex{1, 0.3}}) {
    for (int n = 1; n <= 5; ++n) {
      const auto p = q_laguerre(n, qq);
      const auto lowered = lowering_operator_apply(p, qq, n);
      CHECK(max_coeff_residual(lowered, q_number(n, qq) * q_laguerre(n - 1, qq)) < 1e-12);
      CHECK(p(0.0) == Complex{});
    }
  }
  // The variant with the q-binomial does not satisfy the lowering relation.
  const auto printed = q_laguerre_as_printed(3, q);
  CHECK(max_coeff_residual(lowering_operator_apply(printed, q, 3), q_number(3, q) * q_laguerre_as_printed(2, q)) > 1e-3);
  CHECK_THROWS_AS(q_laguerre(2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(lowering_operator_apply(q_laguerre(4, q), q, 2), std::invalid_argument);
}

TEST_CASE("q-Laguerre at q -> 1 approaches the Lah-type polynomials") {
  // L_3 = -6x + 6x^2 - x^3 when q = 1
  const auto p = q_laguerre(3, 1.0 + 1e-9);
  CHECK(max_coeff_residual(p, Polynomial({0.0, -6.0, 6.0, -1.0})) < 1e-7);
}

TEST_CASE("psi-binomial identities") {
  const auto ps = PsiSequence::q_deformed(0.5);
  const Complex x{0.3, 0.2};
  const Complex y{-0.4, 0.5};
  CHECK(verify_psi_binomial(monomial_family(8), ps, x, y).pass);
  std::vector<Polynomial> lag;
  for (int n = 0; n <= 4; ++n) lag.push_back(q_laguerre(n, 0.5));
  CHECK(verify_psi_binomial(lag, ps, x, y, 1e-9).pass);

  // Classical numbers: E^y is the ordinary shift.
  const auto shifted = generalized_translation(Polynomial::monomial(3), y, PsiSequence::classical(8));
  CHECK(std::abs(shifted(x) - std::pow(x + y, 3)) < 1e-15);

  const std::vector<Polynomial> bad{Polynomial({2.0})};
  CHECK_THROWS_AS(verify_psi_binomial(bad, ps, x, y), std::invalid_argument);
}

TEST_CASE("generating function for monomials") {
  const Complex q{2.0, 0.0};
  const auto ps = PsiSequence::q_deformed(q);
  for (int n = 2; n <= 4; ++n) {
    const CyclicContext ctx(n);
    for (const Complex alpha : {Complex{1, 0}, Complex{-1, 0}, Complex{2, 0}, Complex{}}) {
      const auto a = alpha_root(alpha, n);
      for (int s = 0; s < n; ++s) {
        const auto r = verify_generating_function(monomial_family(48), ps, a, ctx, s, Complex{1.1, 0.2}, 0.9, 48);
        INFO("n=" << n << " s=" << s << " residual=" << r.residual);
        CHECK(r.pass);
      }
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial a({1.0, 2.0});
  const Polynomial b({-1.0, 0.0, 3.0});
  const auto prod = a * b;
  CHECK(prod.degree() == 3);
  CHECK(prod(2.0) == a(2.0) * b(2.0));
  CHECK((a - a).is_zero());
  CHECK((a + b).coeff(2) == Complex{3.0, 0.0});
  CHECK((Complex{0, 1} * a).coeff(1) == Complex{0, 2});
}
