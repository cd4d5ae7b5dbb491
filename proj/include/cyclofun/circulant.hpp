#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cyclofun/cyclic.hpp"
#include "cyclofun/hyperbolic.hpp"
#include "cyclofun/report.hpp"
#include "cyclofun/series.hpp"

namespace cyclofun {

using ComplexMatrix = Eigen::MatrixXcd;

enum class MatrixMethod { assembled, taylor };

/// alpha-twisted cyclic shift: ones on the superdiagonal, alpha bottom-left.
ComplexMatrix gamma_matrix(int n, Complex alpha);

/// Row i, column j holds component (j - i mod n), times alpha when j < i.
/// Equals sum_k c_k gamma(alpha)^k.
ComplexMatrix circulant_from_components(std::span<const Complex> components, Complex alpha);

/// exp(A) by truncated Taylor sum; the order K is the first for which the
/// geometric tail bound ||A||^{K+1}/(K+1)! / (1 - ||A||/(K+2)) drops below
/// `tail_bound` (infinity norm).
ComplexMatrix matrix_exp_taylor(const ComplexMatrix& A, double tail_bound = 1e-15);

/// H^alpha(z) = exp(gamma(alpha) z), either assembled from the family values
/// or summed as a Taylor series of the generator.
ComplexMatrix demoivre_matrix(const HyperbolicFamily& fam, Complex z, MatrixMethod method);
ComplexMatrix demoivre_matrix(int n, const AlphaRoot& a, Complex z, MatrixMethod method);

/// prod_l sum_k c_k r^k omega^{kl}: the eigenvalue product of the alpha-circulant.
Complex circulant_det_spectral(std::span<const Complex> components, const CyclicContext& ctx, const AlphaRoot& a);

/// Determinant by LU with partial pivoting.
Complex circulant_det_direct(const ComplexMatrix& m);

/// (1/sqrt n)(omega^{kl}), the unitary DFT matrix.
ComplexMatrix sylvester_matrix(const CyclicContext& ctx);

double max_abs_entry(const ComplexMatrix& m);
/// max |a_ij - b_ij| / max(1, max |b_ij|)
double matrix_residual(const ComplexMatrix& a, const ComplexMatrix& b);

/// de Moivre / circulant identity checks at one (z, w) pair.
std::vector<IdentityReport> verify_identity_suite(const HyperbolicFamily& fam, Complex z, Complex w);
std::vector<IdentityReport> verify_identity_suite(int n, const AlphaRoot& a, Complex z, Complex w);

/// Group-law residual ||C(z) C(w) - C(z + w)|| for the alpha = 1 circulant
/// built from the components of L.
double circulant_group_law_residual(const TruncatedSeries& L, int n, Complex z, Complex w);

struct NegativeCheck {
  IdentityReport group_law;    // expected to break: residual > 1e-3
  IdentityReport det_product;  // expected to hold: residual <= 1e-9
};

/// Shows that a non-exp L loses the group law while keeping the determinant
/// product. For exp-like L, use circulant_group_law_residual as a control.
NegativeCheck negative_check_non_exp(const TruncatedSeries& L, int n, Complex z, Complex w);

}  // namespace cyclofun
