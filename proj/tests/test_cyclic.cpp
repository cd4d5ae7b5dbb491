#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclofun/cyclic.hpp"
#include "cyclofun/suites.hpp"

using namespace cyclofun;

TEST_CASE("omega table") {
  const CyclicContext c4(4);
  CHECK(c4.omega() == Complex{0.0, 1.0});
  CHECK(c4.omega_pow(2) == Complex{-1.0, 0.0});
  CHECK(c4.omega_pow(-1) == Complex{0.0, -1.0});
  CHECK(CyclicContext(2).omega() == Complex{-1.0, 0.0});

  const CyclicContext c5(5);
  const Complex w = std::polar(1.0, 2 * std::numbers::pi / 5);
  CHECK(std::abs(c5.omega() - w) < 1e-16);
  CHECK(c5.omega_pow(7) == c5.omega_pow(2));
  CHECK_THROWS_AS(CyclicContext(1), std::invalid_argument);
}

TEST_CASE("alpha_root picks the principal root and rotates by branch") {
  const auto a = alpha_root(8.0, 3);
  CHECK(std::abs(a.root - 2.0) < 1e-15);
  const auto b = alpha_root(-1.0, 2);
  CHECK(std::abs(b.root - Complex{0, 1}) < 1e-16);
  const auto c = alpha_root(Complex{0, 2}, 4, 3);
  CHECK(c.branch == 3);
  CHECK(std::abs(std::pow(c.root, 4) - Complex{0, 2}) < 1e-14);
  CHECK(alpha_root(0.0, 3).root == Complex{});
  CHECK(alpha_root(1.0, 3, -1).branch == 2);
}

TEST_CASE("sieve keeps one residue class with weight alpha^m") {
  const CyclicContext ctx(3);
  const auto a = alpha_root(2.0, 3);
  const auto e = series_exp(12);
  const auto p1 = project_series(e, ctx, 1, a);
  // degrees 1, 4, 7, 10 with weights 1, 2, 4, 8
  CHECK(p1.coeff(0) == Complex{});
  CHECK(p1.coeff(1) == e.coeff(1));
  CHECK(p1.coeff(4) == 2.0 * e.coeff(4));
  CHECK(p1.coeff(10) == 8.0 * e.coeff(10));
  CHECK(p1.coeff(5) == Complex{});
  CHECK(project_series(e, ctx, 4, a).coeff(4) == p1.coeff(4));
}

TEST_CASE("Laurent sieve uses alpha^m with negative m") {
  const CyclicContext ctx(2);
  const auto a = alpha_root(4.0, 2);
  const TruncatedSeries s(-3, {1.0, 1.0, 1.0, 1.0});
  const auto p1 = project_series(s, ctx, 1, a);
  // -3 = 2*(-2) + 1 and -1 = 2*(-1) + 1
  CHECK(p1.coeff(-3) == Complex{1.0 / 16, 0.0});
  CHECK(p1.coeff(-1) == Complex{0.25, 0.0});
  CHECK_THROWS_AS(project_series(s, ctx, 1, alpha_root(0.0, 2)), std::invalid_argument);
}

TEST_CASE("alpha = 0 keeps only the leading term of each class") {
  const CyclicContext ctx(3);
  const auto zero = alpha_root(0.0, 3);
  const auto e = series_exp(20);
  for (int s = 0; s < 3; ++s) {
    const auto p = project_series(e, ctx, s, zero);
    for (int k = 0; k <= 20; ++k) CHECK(p.coeff(k) == (k == s ? e.coeff(s) : Complex{}));
  }
}

TEST_CASE("pointwise omega-sum equals the sieve") {
  Sampler rng(5);
  for (int n = 2; n <= 6; ++n) {
    const CyclicContext ctx(n);
    for (const Complex alpha : {Complex{1, 0}, Complex{-1, 0}, Complex{2, 0}, Complex{0, 1}}) {
      const auto a = alpha_root(alpha, n);
      for (int k = 0; k < n; ++k) {
        const Complex z = rng.disk(0.9);
        const Complex sieve = evaluate(project_series(series_exp(), ctx, k, a), z);
        const Complex sum = project_pointwise([](Complex w) { return std::exp(w); }, ctx, k, a, z);
        CHECK(mixed_residual(sieve, sum) < 1e-13);
      }
    }
  }
  CHECK_THROWS_AS(project_pointwise([](Complex w) { return w; }, CyclicContext(2), 0, alpha_root(0.0, 2), 1.0),
                  std::invalid_argument);
}

TEST_CASE("Omega acts on each component by omega^s") {
  const CyclicContext ctx(4);
  const auto a = alpha_root(Complex{0.5, 1}, 4);
  for (int s = 0; s < 4; ++s) {
    const auto c = project_series(series_exp(), ctx, s, a);
    CHECK(max_coeff_diff(omega_scale(c, ctx), series_scalar_mul(c, ctx.omega_pow(s))) == 0.0);
  }
}
