#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cyclofun/series.hpp"
#include "cyclofun/suites.hpp"

using namespace cyclofun;

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

TEST_CASE("exp coefficients are 1/k!") {
  const auto e = series_exp(64);
  CHECK(e.min_deg() == 0);
  CHECK(e.max_deg() == 64);
  for (int k = 0; k <= 64; ++k) {
    const double oracle = 1.0 / std::tgamma(k + 1.0);
    CHECK(std::abs(e.coeff(k) - oracle) <= 4 * kEps * oracle);
  }
  CHECK(e.coeff(65) == Complex{});
  CHECK(e.coeff(-1) == Complex{});
}

TEST_CASE("evaluate matches the library exp inside the disk") {
  const auto e = series_exp();
  Sampler rng(11);
  for (int i = 0; i < 64; ++i) {
    const Complex z = rng.disk(4.0);
    CHECK(std::abs(evaluate(e, z) - std::exp(z)) <= 1e-13 * std::abs(std::exp(z)));
  }
}

TEST_CASE("geometric series against 1/(1-z)") {
  const auto g = series_geometric();
  CHECK(g.domain().max_abs_arg == doctest::Approx(0.9));
  // 0.5^65 / (1 - 0.5) is the truncation error at z = 0.5.
  CHECK(std::abs(evaluate(g, 0.5) - 2.0) < 1e-18 + 4 * kEps);
  CHECK_THROWS_AS(evaluate(g, 0.95), std::domain_error);
}

TEST_CASE("evaluate handles Laurent windows") {
  const std::pair<int, Complex> terms[] = {{-2, 3.0}, {0, 1.0}, {1, Complex{0, 2}}};
  const auto s = make_series(terms);
  CHECK(s.min_deg() == -2);
  CHECK(s.has_negative_terms());
  const Complex z{0.3, -0.7};
  const Complex oracle = 3.0 / (z * z) + 1.0 + Complex{0, 2} * z;
  CHECK(std::abs(evaluate(s, z) - oracle) < 1e-14 * std::abs(oracle));
  CHECK_THROWS_AS(evaluate(s, 0.0), std::domain_error);

  // A window that starts below zero with zero entries there is still fine at 0.
  const TruncatedSeries padded(-3, {0.0, 0.0, 0.0, 5.0});
  CHECK(evaluate(padded, 0.0) == Complex{5.0, 0.0});
  CHECK(evaluate(series_exp(), 0.0) == Complex{1.0, 0.0});
}

TEST_CASE("make_series rejects bad input") {
  const std::pair<int, Complex> dup[] = {{1, 1.0}, {1, 2.0}};
  CHECK_THROWS_AS(make_series(dup), std::invalid_argument);
  const std::pair<int, Complex> nan[] = {{0, std::nan("")}};
  CHECK_THROWS_AS(make_series(nan), std::invalid_argument);
  CHECK_THROWS_AS(make_series({}), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries(0, {}), std::invalid_argument);
}

TEST_CASE("scale_argument composes") {
  Sampler rng(3);
  const auto s = rng.series(-4, 40);

  // Dyadic factors: every product is exact, so composition is within 4 ulp.
  const Complex lambda{0.5, -0.25};
  const Complex mu{-1.5, 0.75};
  const auto twice = scale_argument(scale_argument(s, lambda), mu);
  const auto once = scale_argument(s, lambda * mu);
  for (int k = s.min_deg(); k <= s.max_deg(); ++k) {
    CHECK(std::abs(twice.coeff(k) - once.coeff(k)) <= 4 * kEps * std::abs(once.coeff(k)));
  }

  // General factors round lambda*mu once, which costs about |k| ulp more.
  const Complex l2 = rng.disk();
  const Complex m2 = rng.disk() + 0.5;
  const auto t2 = scale_argument(scale_argument(s, l2), m2);
  const auto o2 = scale_argument(s, l2 * m2);
  for (int k = s.min_deg(); k <= s.max_deg(); ++k) {
    CHECK(std::abs(t2.coeff(k) - o2.coeff(k)) <= (4 + 2 * std::abs(k)) * kEps * std::abs(o2.coeff(k)));
  }

  CHECK(scale_argument(s, 2.0).domain().max_abs_arg == doctest::Approx(2.0));
  CHECK_THROWS_AS(scale_argument(s, 0.0), std::invalid_argument);
  CHECK(scale_argument(series_exp(8), 0.0).coeff(0) == Complex{1.0, 0.0});
}

TEST_CASE("product of exp with itself is exp(2z)") {
  const auto e = series_exp(40);
  const auto sq = series_mul(e, e);
  for (int k = 0; k <= 40; ++k) {
    const double oracle = std::pow(2.0, k) / std::tgamma(k + 1.0);
    CHECK(std::abs(sq.coeff(k) - oracle) <= 1e-14 * oracle);
  }
}

TEST_CASE("product window stops at the degree cap") {
  const auto e = series_exp(200);
  const auto sq = series_mul(e, e);
  CHECK(sq.max_deg() == kProductDegreeCap);
}

TEST_CASE("add, sub and scalar multiply over different windows") {
  const TruncatedSeries a(-1, {1.0, 2.0});
  const TruncatedSeries b(1, {3.0, 4.0});
  const auto sum = series_add(a, b);
  CHECK(sum.min_deg() == -1);
  CHECK(sum.max_deg() == 2);
  CHECK(sum.coeff(0) == Complex{2.0, 0.0});
  CHECK(sum.coeff(1) == Complex{3.0, 0.0});
  CHECK(max_coeff_diff(series_sub(sum, b), a) == 0.0);
  CHECK(series_scalar_mul(a, Complex{0, 1}).coeff(-1) == Complex{0, 1});
}

TEST_CASE("derivative and truncate") {
  const auto e = series_exp(20);
  const auto d = series_derivative(e);
  CHECK(d.max_deg() == 19);
  CHECK(max_coeff_residual(d, truncate(e, 19)) < 1e-15);

  const TruncatedSeries laurent(-2, {1.0, 0.0, 1.0});
  const auto dl = series_derivative(laurent);
  CHECK(dl.coeff(-3) == Complex{-2.0, 0.0});
  CHECK(dl.coeff(-1) == Complex{});
}
