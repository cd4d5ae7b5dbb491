#include "cyclofun/suites.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "cyclofun/circulant.hpp"
#include "cyclofun/cyclic.hpp"
#include "cyclofun/hyperbolic.hpp"

namespace cyclofun {

Complex Sampler::disk(double radius) {
  const double r = radius * std::sqrt(uniform());
  const double theta = 2.0 * std::numbers::pi * uniform();
  return std::polar(r, theta);
}

Complex Sampler::circle() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

TruncatedSeries Sampler::series(int min_deg, int max_deg) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(max_deg - min_deg + 1));
  for (auto& c : coeffs) c = disk();
  return TruncatedSeries(min_deg, std::move(coeffs));
}

Polynomial Sampler::polynomial(int degree) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1);
  for (auto& c : coeffs) c = disk();
  if (coeffs.back() == Complex{}) coeffs.back() = 1.0;
  return Polynomial(std::move(coeffs));
}

namespace {

void stamp(std::vector<IdentityReport>& reports, const SuiteConfig& cfg) {
  for (auto& r : reports) {
    if (!r.params.contains("n")) r.params["n"] = cfg.n;
    if (!r.params.contains("alpha")) r.params["alpha"] = complex_json(cfg.alpha);
  }
}

OrderedJson base_params(const SuiteConfig& cfg) {
  OrderedJson p = OrderedJson::object();
  p["n"] = cfg.n;
  p["alpha"] = complex_json(cfg.alpha);
  p["branch"] = cfg.branch;
  return p;
}

}  // namespace

std::vector<IdentityReport> demoivre_suite(const SuiteConfig& cfg) {
  const AlphaRoot a = alpha_root(cfg.alpha, cfg.n, cfg.branch);
  const HyperbolicFamily fam = build_family(cfg.n, a, cfg.truncation);
  Sampler rng(cfg.seed);
  std::vector<std::vector<IdentityReport>> runs;
  runs.push_back(verify_identity_suite(fam, Complex{}, Complex{}));
  for (int i = 0; i < cfg.samples; ++i) {
    const Complex z = rng.disk();
    const Complex w = rng.disk();
    runs.push_back(verify_identity_suite(fam, z, w));
  }
  auto out = merge_worst(runs);
  stamp(out, cfg);
  return out;
}

std::vector<IdentityReport> circulant_suite(const SuiteConfig& cfg) {
  const int n = cfg.n;
  const CyclicContext ctx(n);
  const AlphaRoot a = alpha_root(cfg.alpha, n, cfg.branch);
  Sampler rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<IdentityReport> out;

  const ComplexMatrix g = gamma_matrix(n, cfg.alpha);
  {
    ComplexMatrix power = ComplexMatrix::Identity(n, n);
    for (int i = 0; i < n; ++i) power = power * g;
    const ComplexMatrix target = cfg.alpha * ComplexMatrix::Identity(n, n);
    out.push_back(make_report("gamma_power_n", base_params(cfg), matrix_residual(power, target), 1e-13));
    out.push_back(make_report("gamma_trace", base_params(cfg), std::abs(g.trace()), 0.0));
  }

  {
    const ComplexMatrix S = sylvester_matrix(ctx);
    const ComplexMatrix I = ComplexMatrix::Identity(n, n);
    out.push_back(make_report("sylvester_unitary", base_params(cfg), matrix_residual(S * S.adjoint(), I), 1e-12));
    ComplexMatrix diag = ComplexMatrix::Zero(n, n);
    for (int l = 0; l < n; ++l) diag(l, l) = ctx.omega_pow(l);
    out.push_back(make_report("sylvester_diagonalizes_shift", base_params(cfg),
                              matrix_residual(S.adjoint() * gamma_matrix(n, 1.0) * S, diag), 1e-11));
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 16; ++i) {
      std::vector<Complex> comps(static_cast<std::size_t>(n));
      for (auto& c : comps) c = rng.disk();
      const Complex direct = circulant_det_direct(circulant_from_components(comps, cfg.alpha));
      worst = std::max(worst, mixed_residual(circulant_det_spectral(comps, ctx, a), direct));
    }
    auto p = base_params(cfg);
    p["samples"] = 16;
    out.push_back(make_report("spectral_vs_direct_det", p, worst, 1e-9));
  }

  {
    const HyperbolicFamily fam = build_family(n, a, cfg.truncation);
    const double radius = fam.component(0).domain().max_abs_arg;
    constexpr double h = 1e-5;
    double ode = 0.0;
    double unity = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Complex z = rng.disk(std::min(1.0, 0.9 * radius));
      const ComplexMatrix Hz = demoivre_matrix(fam, z, MatrixMethod::assembled);
      const ComplexMatrix diff = (demoivre_matrix(fam, z + h, MatrixMethod::assembled) -
                                  demoivre_matrix(fam, z - h, MatrixMethod::assembled)) /
                                 (2.0 * h);
      ode = std::max(ode, matrix_residual(diff, g * Hz));
      unity = std::max(unity, mixed_residual(circulant_det_direct(demoivre_matrix(fam, z, MatrixMethod::taylor)), 1.0));
    }
    auto p = base_params(cfg);
    p["h"] = h;
    out.push_back(make_report("generator_ode", p, ode, 1e-6));
    out.push_back(make_report("det_taylor_unity", base_params(cfg), unity, 1e-10));
  }

  {
    // n = 3, alpha = 1, z = 0.3: det = prod_l 1/(1 - omega^l z) = 1/(1 - z^3).
    const CyclicContext c3(3);
    const AlphaRoot one = alpha_root(1.0, 3, 0);
    const Complex z = 0.3;
    const auto geo = series_geometric(kDefaultTruncation);
    std::vector<Complex> comps;
    for (int k = 0; k < 3; ++k) comps.push_back(evaluate(project_series(geo, c3, k, one), z));
    const Complex expected = 1.0 / (1.0 - z * z * z);
    const Complex direct = circulant_det_direct(circulant_from_components(comps, 1.0));
    const Complex spectral = circulant_det_spectral(comps, c3, one);
    OrderedJson p = OrderedJson::object();
    p["n"] = 3;
    p["alpha"] = complex_json(1.0);
    p["z"] = complex_json(z);
    p["det_direct"] = direct.real();
    p["det_spectral"] = spectral.real();
    p["expected"] = expected.real();
    out.push_back(make_report("det_geometric_closed_form", p,
                              std::max(mixed_residual(direct, expected), mixed_residual(spectral, expected)), 1e-9));
  }

  {
    const Complex z = 0.2;
    const auto negative = negative_check_non_exp(series_geometric(kDefaultTruncation), n, z, z);
    out.push_back(negative.group_law);
    out.push_back(negative.det_product);

    OrderedJson p = OrderedJson::object();
    p["n"] = n;
    p["z"] = complex_json(z);
    p["w"] = complex_json(z);
    p["L"] = "exp";
    out.push_back(make_report("control_group_law_exp", p,
                              circulant_group_law_residual(series_exp(cfg.truncation), n, z, z), 1e-10));
    p["L"] = "S(2)exp";
    out.push_back(make_report("control_group_law_scaled_exp", p,
                              circulant_group_law_residual(scale_argument(series_exp(cfg.truncation), 2.0), n, z, z),
                              1e-10));
  }

  stamp(out, cfg);
  return out;
}

namespace {

std::vector<Polynomial> q_laguerre_family(int N, Complex q) {
  std::vector<Polynomial> out;
  for (int n = 0; n <= N; ++n) out.push_back(q_laguerre(n, q));
  return out;
}

// (x)_n = x (x-1) ... (x-n+1)
std::vector<Polynomial> falling_factorial_family(int N) {
  std::vector<Polynomial> out{Polynomial({Complex{1.0, 0.0}})};
  for (int n = 1; n <= N; ++n) out.push_back(out.back() * Polynomial({Complex(-(n - 1), 0.0), Complex{1.0, 0.0}}));
  return out;
}

double plain_binomial_residual(const std::vector<Polynomial>& family, Complex x, Complex y) {
  double worst = 0.0;
  for (int n = 0; n < static_cast<int>(family.size()); ++n) {
    Complex rhs{};
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
      rhs += binom * family[static_cast<std::size_t>(k)](x) * family[static_cast<std::size_t>(n - k)](y);
      binom = binom * (n - k) / (k + 1);
    }
    worst = std::max(worst, mixed_residual(family[static_cast<std::size_t>(n)](x + y), rhs));
  }
  return worst;
}

}  // namespace

std::vector<IdentityReport> qpsi_suite(const SuiteConfig& cfg) {
  const Complex q = cfg.q.value_or(Complex{0.5, 0.0});
  const int n = cfg.n;
  const CyclicContext ctx(n);
  const AlphaRoot a = alpha_root(cfg.alpha, n, cfg.branch);
  const PsiSequence ps = PsiSequence::q_deformed(q);
  Sampler rng(cfg.seed ^ 0xd1b54a32d192ed03ULL);
  std::vector<IdentityReport> out;

  auto params = [&] {
    OrderedJson p = base_params(cfg);
    p["q"] = complex_json(q);
    return p;
  };

  {
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const auto f = to_series(rng.polynomial(12));
      const auto g = to_series(rng.polynomial(12));
      const auto lhs = jackson_derivative(series_mul(f, g), q);
      const auto rhs = series_add(series_mul(jackson_derivative(f, q), g),
                                  series_mul(scale_argument(f, q), jackson_derivative(g, q)));
      worst = std::max(worst, max_coeff_residual(lhs, rhs));
    }
    out.push_back(make_report("q_leibniz", params(), worst, 1e-11));
  }

  {
    const auto f = to_series(rng.polynomial(12));
    const auto d = jackson_derivative(f, q);
    const double radius = std::min(1.0, 3.9 / std::max(1.0, std::abs(q)));
    double worst = 0.0;
    for (int i = 0; i < 32; ++i) {
      Complex x = rng.disk(radius);
      if (std::abs(x) < 1e-3) x = 1e-3;
      worst = std::max(worst, mixed_residual(jackson_difference_quotient(f, q, x), evaluate(d, x)));
    }
    out.push_back(make_report("jackson_two_routes", params(), worst, 1e-10));
    out.push_back(make_report("psi_derivative_matches_jackson", params(), max_coeff_diff(psi_derivative(f, ps), d), 0.0));
  }

  {
    const auto e = series_exp_psi(ps, cfg.truncation);
    out.push_back(make_report("exp_q_fixed_point", params(),
                              max_coeff_residual(jackson_derivative(e, q), truncate(e, cfg.truncation - 1)), 1e-12));
  }

  const HyperbolicFamily qfam = build_psi_hyperbolic(ps, ctx, a, cfg.truncation);
  {
    double worst = 0.0;
    for (int k = 1; k <= n; ++k) {
      for (int l = 0; l < n; ++l) {
        TruncatedSeries lhs = qfam.component(l);
        for (int j = 0; j < k; ++j) lhs = jackson_derivative(lhs, q);
        Complex factor{1.0, 0.0};
        for (int s = 0; s < k; ++s) {
          if (zmod(l - s, n) == 0) factor *= cfg.alpha;
        }
        const auto rhs = truncate(series_scalar_mul(qfam.component(l - k), factor), lhs.max_deg());
        worst = std::max(worst, max_coeff_residual(lhs, rhs));
      }
    }
    out.push_back(make_report("derivative_ladder", params(), worst, 1e-11));
  }

  {
    double worst = 0.0;
    for (int s = 0; s < n; ++s) {
      const auto& c = qfam.component(s);
      worst = std::max(worst, max_coeff_diff(omega_scale(c, ctx), series_scalar_mul(c, ctx.omega_pow(s))));
    }
    out.push_back(make_report("omega_eigen_q_hyperbolic", params(), worst, 1e-13));
  }

  {
    double lowering = 0.0;
    double basic = 0.0;
    for (int m = 1; m <= 5; ++m) {
      const auto p = q_laguerre(m, q);
      const auto lowered = lowering_operator_apply(p, q, p.degree());
      lowering = std::max(lowering, max_coeff_residual(lowered, q_number(m, q) * q_laguerre(m - 1, q)));
      basic = std::max(basic, std::abs(p(0.0)));
      if (p.degree() != m) basic = std::max(basic, 1.0);
    }
    if (q_laguerre(0, q).coeff(0) != Complex{1.0, 0.0} || q_laguerre(0, q).degree() != 0) basic = 1.0;
    out.push_back(make_report("q_laguerre_lowering", params(), lowering, 1e-10));
    out.push_back(make_report("q_laguerre_basic_sequence", params(), basic, 0.0));
  }

  {
    const Complex x = rng.disk(0.8);
    const Complex y = rng.disk(0.8);
    auto mono = verify_psi_binomial(monomial_family(6), ps, x, y, 1e-11);
    mono.identity = "psi_binomial_monomials";
    out.push_back(mono);
    auto lag = verify_psi_binomial(q_laguerre_family(4, q), ps, x, y, 1e-9);
    lag.identity = "psi_binomial_q_laguerre";
    out.push_back(lag);

    double plain = std::max(plain_binomial_residual(monomial_family(6), x, y),
                            plain_binomial_residual(falling_factorial_family(6), x, y));
    const auto classical = PsiSequence::classical(16);
    auto params_c = params();
    params_c["psi"] = "classical";
    auto rep = verify_psi_binomial(monomial_family(6), classical, x, y, 1e-12);
    out.push_back(make_report("binomial_plain_classical", params_c, std::max(plain, rep.residual), 1e-12));
  }

  {
    constexpr int kN = 48;
    const auto family = monomial_family(kN);
    const double limit = 0.95 * ps.exp_radius();
    std::vector<std::vector<IdentityReport>> runs;
    for (int i = 0; i < cfg.samples; ++i) {
      const Complex x = rng.disk(1.2);
      Complex z = rng.disk(1.25);
      const double reach = std::abs(a.root * x * z);
      if (reach > limit) z *= limit / reach;
      std::vector<IdentityReport> run;
      for (int s = 0; s < n; ++s) run.push_back(verify_generating_function(family, ps, a, ctx, s, x, z, kN, 1e-9));
      runs.push_back(std::move(run));
    }
    for (auto& r : merge_worst(runs)) out.push_back(std::move(r));
  }

  {
    const Complex q1{1.0 + 1e-8, 0.0};
    const auto near = PsiSequence::q_deformed(q1, cfg.truncation);
    double worst = 0.0;
    for (int m = 1; m <= cfg.truncation; ++m) worst = std::max(worst, std::abs(near.number(m) - static_cast<double>(m)) / m);
    worst = std::max(worst, max_coeff_residual(series_exp_psi(near, cfg.truncation), series_exp(cfg.truncation)));
    const auto classical = build_family(n, a, cfg.truncation);
    const auto deformed = build_psi_hyperbolic(near, ctx, a, cfg.truncation);
    for (int s = 0; s < n; ++s) {
      worst = std::max(worst, max_coeff_residual(deformed.component(s), classical.component(s)));
    }
    worst = std::max(worst, max_coeff_residual(jackson_derivative(series_exp(cfg.truncation), q1),
                                               series_derivative(series_exp(cfg.truncation))));
    out.push_back(make_report("q_to_1_continuity", params(), worst, 1e-5));
  }

  stamp(out, cfg);
  return out;
}

}  // namespace cyclofun
