#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cyclofun/hyperbolic.hpp"
#include "cyclofun/suites.hpp"

using namespace cyclofun;

TEST_CASE("n = 2 gives cosh/sinh and cos/sin") {
  const auto hyp = build_family(2, alpha_root(1.0, 2));
  const auto trig = build_family(2, alpha_root(-1.0, 2));
  Sampler rng(17);
  for (int i = 0; i < 32; ++i) {
    const Complex z = rng.disk(2.0);
    CHECK(std::abs(h_eval(hyp, 0, z, EvalMethod::series) - std::cosh(z)) <= 1e-13 * std::abs(std::cosh(z)));
    CHECK(std::abs(h_eval(hyp, 1, z, EvalMethod::series) - std::sinh(z)) <= 1e-13 * std::abs(std::sinh(z)));
    CHECK(std::abs(h_eval(trig, 0, z, EvalMethod::series) - std::cos(z)) <= 1e-13 * std::max(1.0, std::abs(std::cos(z))));
    CHECK(std::abs(h_eval(trig, 1, z, EvalMethod::series) - std::sin(z)) <= 1e-13 * std::max(1.0, std::abs(std::sin(z))));
  }
  CHECK(h_eval(hyp, 0, 1.0, EvalMethod::series).real() == doctest::Approx(1.5430806348152437).epsilon(1e-15));
}

TEST_CASE("alpha = 0 gives monomials z^s/s!") {
  const auto fam = build_family(3, alpha_root(0.0, 3));
  const Complex z{0.7, -0.2};
  CHECK(std::abs(h_eval(fam, 0, z, EvalMethod::series) - 1.0) < 1e-16);
  CHECK(std::abs(h_eval(fam, 1, z, EvalMethod::series) - z) < 1e-16);
  CHECK(std::abs(h_eval(fam, 2, z, EvalMethod::series) - z * z / 2.0) < 1e-16);
  CHECK_THROWS_AS(h_eval(fam, 0, z, EvalMethod::closed), std::invalid_argument);
}

TEST_CASE("components sum to exp at alpha = 1") {
  for (int n = 2; n <= 6; ++n) {
    const auto fam = build_family(n, alpha_root(1.0, n));
    const Complex z{0.4, 1.1};
    Complex sum{};
    for (const auto v : fam.values(z)) sum += v;
    CHECK(std::abs(sum - std::exp(z)) < 1e-14 * std::abs(std::exp(z)));
  }
}

TEST_CASE("series and closed paths agree") {
  Sampler rng(23);
  for (int n = 2; n <= 5; ++n) {
    for (const Complex alpha : {Complex{1, 0}, Complex{-1, 0}, Complex{2, 0}, Complex{0.3, -1.2}}) {
      const auto fam = build_family(n, alpha_root(alpha, n));
      for (int s = 0; s < n; ++s) {
        const Complex z = rng.disk(1.5);
        CHECK(mixed_residual(h_eval(fam, s, z, EvalMethod::series), h_eval(fam, s, z, EvalMethod::closed)) < 1e-13);
      }
    }
  }
}

TEST_CASE("evaluation outside the trusted disk is a domain error") {
  const auto fam = build_family(3, alpha_root(1.0, 3));
  CHECK_THROWS_AS(h_eval(fam, 0, 10.0, EvalMethod::series), std::domain_error);
  CHECK_THROWS_AS(h_eval(fam, 0, 10.0, EvalMethod::closed), std::domain_error);
  // alpha = 8: r = 2 halves the disk.
  const auto big = build_family(3, alpha_root(8.0, 3));
  CHECK_THROWS_AS(h_eval(big, 0, 2.5, EvalMethod::series), std::domain_error);
  CHECK_THROWS_AS(build_family(4, alpha_root(1.0, 4), 3), std::invalid_argument);
}

TEST_CASE("geometric components against 1/(1-w)") {
  const CyclicContext ctx(3);
  const auto a = alpha_root(2.0, 3);
  const auto geo = series_geometric();
  const Complex z{0.3, 0.2};
  Complex weighted{};
  for (int l = 0; l < 3; ++l) {
    const Complex closed = g_eval(ctx, a, l, z);
    CHECK(mixed_residual(closed, evaluate(laurent_component(geo, ctx, a, l), z)) < 1e-14);
    weighted += std::pow(a.root, l) * closed;
  }
  // sum_l r^l g_l(z) = 1/(1 - r z)
  CHECK(mixed_residual(weighted, 1.0 / (1.0 - a.root * z)) < 1e-14);
  CHECK_THROWS_AS(g_eval(ctx, a, 0, 0.8), std::domain_error);
  CHECK(laurent_component(geo, ctx, a, 1).label() == "L_1^alpha");
}
