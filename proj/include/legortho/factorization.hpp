#pragma once

#include <array>
#include <complex>
#include <vector>

#include "legortho/certificate.hpp"

namespace legortho {

/**
 * F_n and its reversal G_n(z) = z^{2n} F_n(1/z). Both are even polynomials of
 * degree 2n with positive dyadic coefficients, and
 *   K_n(J(z)) = F_n(z) F_n(1/z) / (2(n+1)).
 */
struct FactorPair {
  int n = 0;
  ExactPoly f;
  ExactPoly g;
};

/// d/dz (z^{n+1} P_n(J(z))).
ExactPoly fn_from_definition(int n);

/// 2^{-2n} sum_k (2k+1) C(2k,k) C(2n-2k,n-k) z^{2k}.
ExactPoly fn_closed_coeffs(int n);

/// Terminating 2F1(-n, 3/2; 1/2-n; w) with rising factorials multiplied out.
ExactPoly hypergeometric_series(int n);

/// 2^{-2n} C(2n,n) 2F1(-n, 3/2; 1/2-n; z^2).
ExactPoly fn_hypergeometric(int n);

/// z^{2n} F_n(1/z).
ExactPoly gn_build(int n);

/// G_n from F_n's coefficients c_k: sum_k c_{n-k} z^{2k}.
ExactPoly gn_from_reversed_coefficients(int n);

/// G_n from sum_k ((2(n-k)+1)/(2k+1)) c_k z^{2k}.
ExactPoly gn_from_ratio_rule(int n);

FactorPair factor_pair(int n);

/// K_n(J(z)) - F_n(z) F_n(1/z) / (2(n+1)) is zero.
Certificate check_fejer_riesz(int n);

/// F_n == closed binomial coefficients.
Certificate check_fn_closed_form(int n);

/**
 * (z^2-1)F_n = z^n{((2n+1)z^2-1)P_n(J) - 2nz P_{n-1}(J)} and
 * (z^2-1)G_n = z^n{(z^2-(2n+1))P_n(J) + 2nz P_{n-1}(J)}. Requires n >= 1.
 */
std::array<Certificate, 2> check_fn_gn_alt(int n);

/// The right-hand sides above divided by (z^2-1), in floating point.
std::complex<double> fn_alternate_eval(int n, std::complex<double> z);
std::complex<double> gn_alternate_eval(int n, std::complex<double> z);

/// z(1-z^2)F'' + 2((n-2)z^2-n)F' + 6nzF = 0. Requires n >= 1.
Certificate check_ode(int n);

/**
 * The scaled terminating hypergeometric series equals the closed
 * coefficients with z -> z^2, its leading coefficient is 2n+1, and the
 * closed forms of (a)_k, (b)_k, (c)_k hold. Requires n >= 1.
 */
Certificate hypergeometric_check(int n);

/**
 * Both G_n coefficient rules match the reversal, G_n(0) = (2n+1)F_n(0),
 * F_n(0) = 2^{-2n}C(2n,n), and F_n has only even powers with positive
 * coefficients.
 */
Certificate check_coefficient_reversal(int n);

struct RootInfo {
  std::complex<double> z;
  double modulus = 0.0;
  /// |F_n(z)|.
  double residual = 0.0;
  /// sum_k |c_k| |z|^{2k}; the natural size of F_n(z) at this point.
  double residual_scale = 0.0;
  bool converged = false;
};

struct RootReport {
  int n = 0;
  std::vector<RootInfo> roots;
  double max_modulus = 0.0;
  double min_separation = 0.0;

  bool all_inside_unit_disk() const { return max_modulus < 1.0; }
  bool all_simple(double threshold = 1e-8) const {
    return min_separation > threshold;
  }
  bool all_converged() const;
  bool certified(double separation_threshold = 1e-8) const {
    return all_inside_unit_disk() && all_simple(separation_threshold) &&
           all_converged();
  }
};

/**
 * The 2n zeros of F_n: eigenvalues of the companion matrix of f_n(w) with
 * F_n(z) = f_n(z^2), refined by Aberth iteration, then z = +-sqrt(w)
 * polished by Newton steps on F_n. A root is converged when
 * residual <= 1e-10 * residual_scale. Requires n >= 1.
 */
RootReport fn_roots(int n);

} // namespace legortho
