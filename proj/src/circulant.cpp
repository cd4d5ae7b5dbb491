#include "cyclofun/circulant.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclofun {

ComplexMatrix gamma_matrix(int n, Complex alpha) {
  if (n < 2) throw std::invalid_argument("gamma_matrix: order must be at least 2");
  ComplexMatrix g = ComplexMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) g(i, i + 1) = 1.0;
  g(n - 1, 0) = alpha;
  return g;
}

ComplexMatrix circulant_from_components(std::span<const Complex> components, Complex alpha) {
  const auto n = static_cast<int>(components.size());
  if (n < 1) throw std::invalid_argument("circulant_from_components: no components");
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex c = components[static_cast<std::size_t>(zmod(j - i, n))];
      m(i, j) = j < i ? alpha * c : c;
    }
  }
  return m;
}

ComplexMatrix matrix_exp_taylor(const ComplexMatrix& A, double tail_bound) {
  const double norm = A.cwiseAbs().rowwise().sum().maxCoeff();
  constexpr int kMaxOrder = 2000;
  // Smallest K with norm^{K+1}/(K+1)! / (1 - norm/(K+2)) < tail_bound.
  int K = 0;
  double next_term = norm;  // norm^{K+1}/(K+1)!
  while (K < kMaxOrder) {
    const double ratio = norm / (K + 2);
    if (ratio < 1.0 && next_term / (1.0 - ratio) < tail_bound) break;
    ++K;
    next_term *= norm / (K + 1);
  }
  if (K == kMaxOrder) throw std::domain_error("matrix_exp_taylor: norm too large for a plain Taylor sum");

  const auto n = A.rows();
  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= K; ++k) {
    term = (term * A) / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

ComplexMatrix demoivre_matrix(const HyperbolicFamily& fam, Complex z, MatrixMethod method) {
  if (method == MatrixMethod::taylor) {
    return matrix_exp_taylor(gamma_matrix(fam.order(), fam.root().alpha) * z);
  }
  const auto values = fam.values(z);
  return circulant_from_components(values, fam.root().alpha);
}

ComplexMatrix demoivre_matrix(int n, const AlphaRoot& a, Complex z, MatrixMethod method) {
  if (method == MatrixMethod::taylor) return matrix_exp_taylor(gamma_matrix(n, a.alpha) * z);
  return demoivre_matrix(build_family(n, a), z, method);
}

Complex circulant_det_spectral(std::span<const Complex> components, const CyclicContext& ctx, const AlphaRoot& a) {
  const int n = ctx.order();
  if (static_cast<int>(components.size()) != n) {
    throw std::invalid_argument("circulant_det_spectral: expected " + std::to_string(n) + " components");
  }
  Complex det{1.0, 0.0};
  Complex r_pow{1.0, 0.0};
  std::vector<Complex> weighted(components.begin(), components.end());
  for (int k = 0; k < n; ++k) {
    weighted[static_cast<std::size_t>(k)] *= r_pow;
    r_pow *= a.root;
  }
  for (int l = 0; l < n; ++l) {
    Complex eig{};
    for (int k = 0; k < n; ++k) eig += weighted[static_cast<std::size_t>(k)] * ctx.omega_pow(static_cast<std::int64_t>(k) * l);
    det *= eig;
  }
  return det;
}

Complex circulant_det_direct(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("circulant_det_direct: matrix is not square");
  return Eigen::PartialPivLU<ComplexMatrix>(m).determinant();
}

ComplexMatrix sylvester_matrix(const CyclicContext& ctx) {
  const int n = ctx.order();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix s(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) s(k, l) = scale * ctx.omega_pow(static_cast<std::int64_t>(k) * l);
  }
  return s;
}

double max_abs_entry(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double matrix_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs_entry(a - b) / std::max(1.0, max_abs_entry(b));
}

namespace {

// Scales z and w together so that every argument the suite touches, up to
// 4 max(|z|, |w|), stays inside the family's evaluation disk.
double argument_budget(const HyperbolicFamily& fam, Complex z, Complex w) {
  const double radius = fam.component(0).domain().max_abs_arg;
  const double reach = 4.0 * std::max(std::abs(z), std::abs(w));
  if (reach == 0.0 || reach <= radius) return 1.0;
  return 0.999 * radius / reach;
}

Complex matrix_power_det_quartic_as_printed(const std::vector<Complex>& h) {
  const Complex x = h[0], y = h[1], z = h[2], t = h[3];
  return -x * x * x * x + y * y * y * y - z * z * z * z + t * t * t * t + 4.0 * x * x * y * t -
         4.0 * x * y * y * z + 4.0 * z * z * y * t - 4.0 * t * t * x * z + 2.0 * x * x * z * z -
         2.0 * y * y * t * t;
}

}  // namespace

std::vector<IdentityReport> verify_identity_suite(const HyperbolicFamily& fam, Complex z_in, Complex w_in) {
  const int n = fam.order();
  const auto& ctx = fam.context();
  const AlphaRoot& a = fam.root();
  const Complex alpha = a.alpha;

  const double t = argument_budget(fam, z_in, w_in);
  const Complex z = z_in * t;
  const Complex w = w_in * t;

  OrderedJson base = OrderedJson::object();
  base["n"] = n;
  base["alpha"] = complex_json(alpha);
  base["branch"] = a.branch;
  base["z"] = complex_json(z);
  base["w"] = complex_json(w);
  auto params = [&base](std::initializer_list<std::pair<const char*, OrderedJson>> extra = {}) {
    OrderedJson p = base;
    for (const auto& [k, v] : extra) p[k] = v;
    return p;
  };

  std::vector<IdentityReport> out;
  const auto hz = fam.values(z);
  const auto hw = fam.values(w);
  const ComplexMatrix Hz = circulant_from_components(hz, alpha);
  const ComplexMatrix Hw = circulant_from_components(hw, alpha);

  // (a) group law
  out.push_back(make_report("group_law", params(),
                            matrix_residual(Hz * Hw, demoivre_matrix(fam, z + w, MatrixMethod::assembled)), 1e-10));

  // (b) matrix de Moivre H(m phi) = H(phi)^m
  for (int m = 2; m <= 4; ++m) {
    ComplexMatrix power = ComplexMatrix::Identity(n, n);
    for (int i = 0; i < m; ++i) power = power * Hz;
    out.push_back(make_report("demoivre_power_m" + std::to_string(m), params({{"m", m}}),
                              matrix_residual(demoivre_matrix(fam, static_cast<double>(m) * z, MatrixMethod::assembled), power),
                              1e-10));
  }

  // assembled vs generator Taylor sum
  out.push_back(make_report("assembled_vs_taylor", params(),
                            matrix_residual(Hz, demoivre_matrix(fam, z, MatrixMethod::taylor)), 1e-11));

  // det H = 1
  {
    const Complex det = circulant_det_direct(Hz);
    auto p = params();
    if (n == 4 && alpha == Complex{1.0, 0.0}) {
      // Informational: the printed quartic surface, not a pass criterion.
      p["quartic_as_printed_residual"] = std::abs(matrix_power_det_quartic_as_printed(hz) - 1.0);
    }
    out.push_back(make_report("det_unity", p, mixed_residual(det, 1.0), 1e-10));
  }

  if (n == 2) {
    out.push_back(make_report("cosh_sinh_det", params(),
                              mixed_residual(hz[0] * hz[0] - alpha * hz[1] * hz[1], 1.0), 1e-12));
  }

  if (n == 3) {
    const Complex x = hz[0], y = hz[1], s = hz[2];
    if (alpha == Complex{1.0, 0.0}) {
      out.push_back(make_report("cubic_det_surface", params(),
                                mixed_residual(x * x * x + y * y * y + s * s * s - 3.0 * x * y * s, 1.0), 1e-10));
    }
    out.push_back(make_report("alpha_cubic_surface", params(),
                              mixed_residual(x * x * x + alpha * y * y * y + alpha * alpha * s * s * s -
                                                 3.0 * alpha * x * y * s,
                                             1.0),
                              1e-10));

    const Complex h0_3x = evaluate(fam.component(0), 3.0 * z);
    const Complex cubic = x * x * x + alpha * y * y * y + alpha * alpha * s * s * s + 6.0 * alpha * x * y * s;
    out.push_back(make_report("triple_argument", params(), mixed_residual(h0_3x, cubic), 1e-10));

    const Complex rhs14 = (h0_3x - 1.0) / 9.0;
    out.push_back(make_report("product_h0h1h2", params({{"as_printed_residual", mixed_residual(x * y * y, rhs14)}}),
                              mixed_residual(alpha * x * y * s, rhs14), 1e-10));
  }

  // Product formula: h_l(z) h_0(w) = (1/n) sum_k h_l(z + omega^k w)
  {
    double corrected = 0.0;
    double printed = 0.0;
    for (int l = 0; l < n; ++l) {
      Complex avg{};
      for (int k = 0; k < n; ++k) avg += evaluate(fam.component(l), z + ctx.omega_pow(k) * w);
      avg /= static_cast<double>(n);
      corrected = std::max(corrected, mixed_residual(hz[static_cast<std::size_t>(l)] * hw[0], avg));
      printed = std::max(printed, mixed_residual(hz[0] * hw[static_cast<std::size_t>(l)], avg));
    }
    out.push_back(make_report("product_formula", params({{"as_printed_residual", printed}}), corrected, 1e-10));
  }

  // Addition formula: h_k(z + w) = sum_i h_i(z) h_{k-i}(w), alpha on wrapped terms
  {
    const auto hzw = fam.values(z + w);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      Complex sum{};
      for (int i = 0; i < n; ++i) {
        const Complex term = hz[static_cast<std::size_t>(i)] * hw[static_cast<std::size_t>(zmod(k - i, n))];
        sum += i > k ? alpha * term : term;
      }
      worst = std::max(worst, mixed_residual(hzw[static_cast<std::size_t>(k)], sum));
    }
    out.push_back(make_report("addition_formula", params(), worst, 1e-10));
  }

  // Determinant-product theorem, L = exp
  {
    Complex product{1.0, 0.0};
    for (int l = 0; l < n; ++l) product *= std::exp(ctx.omega_pow(l) * a.root * z);
    const Complex direct = circulant_det_direct(Hz);
    const Complex spectral = circulant_det_spectral(hz, ctx, a);
    out.push_back(make_report("det_product_exp", params(),
                              std::max(mixed_residual(direct, product), mixed_residual(spectral, product)), 1e-9));
  }

  // Determinant-product theorem, L = geometric, argument pulled inside |r z| <= 0.5
  {
    const double rz = std::abs(a.root * z);
    const Complex zg = rz > 0.5 ? z * (0.5 / rz) : z;
    const auto geo = series_geometric(kDefaultTruncation);
    std::vector<Complex> comps;
    for (int k = 0; k < n; ++k) comps.push_back(evaluate(project_series(geo, ctx, k, a), zg));
    // prod_l 1/(1 - omega^l r z) = 1/(1 - alpha z^n)
    const Complex product = 1.0 / (1.0 - alpha * ipow(zg, n));
    const Complex direct = circulant_det_direct(circulant_from_components(comps, alpha));
    const Complex spectral = circulant_det_spectral(comps, ctx, a);
    out.push_back(make_report("det_product_geometric", params({{"z_geometric", complex_json(zg)}}),
                              std::max(mixed_residual(direct, product), mixed_residual(spectral, product)), 1e-9));
  }

  return out;
}

std::vector<IdentityReport> verify_identity_suite(int n, const AlphaRoot& a, Complex z, Complex w) {
  return verify_identity_suite(build_family(n, a), z, w);
}

namespace {

ComplexMatrix circulant_of(const TruncatedSeries& L, const CyclicContext& ctx, const AlphaRoot& one, Complex z) {
  std::vector<Complex> comps;
  for (int k = 0; k < ctx.order(); ++k) comps.push_back(evaluate(project_series(L, ctx, k, one), z));
  return circulant_from_components(comps, one.alpha);
}

}  // namespace

double circulant_group_law_residual(const TruncatedSeries& L, int n, Complex z, Complex w) {
  const CyclicContext ctx(n);
  const AlphaRoot one = alpha_root(1.0, n, 0);
  const ComplexMatrix lhs = circulant_of(L, ctx, one, z) * circulant_of(L, ctx, one, w);
  return matrix_residual(lhs, circulant_of(L, ctx, one, z + w));
}

NegativeCheck negative_check_non_exp(const TruncatedSeries& L, int n, Complex z, Complex w) {
  const CyclicContext ctx(n);
  const AlphaRoot one = alpha_root(1.0, n, 0);
  OrderedJson p = OrderedJson::object();
  p["L"] = L.label();
  p["n"] = n;
  p["z"] = complex_json(z);
  p["w"] = complex_json(w);

  const double group = circulant_group_law_residual(L, n, z, w);

  Complex product{1.0, 0.0};
  for (int l = 0; l < n; ++l) product *= evaluate(L, ctx.omega_pow(l) * z);
  const Complex det = circulant_det_direct(circulant_of(L, ctx, one, z));

  return NegativeCheck{
      make_report("non_exp_group_law_breaks", p, group, 1e-3, Expectation::violated),
      make_report("non_exp_det_product", p, mixed_residual(det, product), 1e-9),
  };
}

}  // namespace cyclofun
