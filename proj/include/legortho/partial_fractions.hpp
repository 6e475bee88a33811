#pragma once

#include <array>
#include <vector>

#include "legortho/certificate.hpp"
#include "legortho/factorization.hpp"
#include "legortho/legendre.hpp"

namespace legortho {

/**
 * Laurent families splitting 2(n+1) z^{2n-1} P_m(J(z)) over G_n and F_n:
 *   A_k G_n + B_k F_n  for m = n + k,
 *   C_k G_n + D_k F_n  for m = n - k, 0 <= k <= n.
 * All four start at z^{n-1}; A_1 = z^{n-2}, B_1 = z^n,
 * C_1 = z^{n-2}((2n+1)z^2-1)/(2n), D_1 = z^{n-2}((2n+1)-z^2)/(2n), and the
 * rest follow the Legendre recurrence in J(z) (forward for A/B, backward
 * for C/D).
 */
struct AbcdFamily {
  int n = 0;
  std::vector<ExactPoly> a, b;
  std::vector<ExactPoly> c, d;

  int k_max() const { return static_cast<int>(a.size()) - 1; }
};

/// A/B up to index k_max, C/D up to index n. Requires n >= 1, k_max >= 1.
AbcdFamily build_abcd(int n, int k_max);

Certificate check_pfd_plus(const AbcdFamily &family, const FactorPair &pair,
                           int k);
Certificate check_pfd_minus(const AbcdFamily &family, const FactorPair &pair,
                            int k);
Certificate check_pfd_plus(int n, int k);
Certificate check_pfd_minus(int n, int k);

struct SupportEntry {
  char family = 'A';
  int k = 0;
  int min_exponent = 0;
  int max_exponent = 0;
  /// Whether [min, max] sits inside the bounds displayed alongside the
  /// definition (only meaningful for k >= 1).
  bool within_displayed_bounds = true;
};

struct SupportReport {
  int n = 0;
  std::vector<SupportEntry> entries;
  Certificate certificate;
};

/**
 * Exact exponent ranges of every family member. The certificate asserts that
 * B_k is a polynomial for k <= n, that A_k, B_k, C_k are polynomials of degree
 * <= 2n-2 for k <= n-1, that A_n has a z^{-1} term, and that C_n and D_n span
 * exponents -1..2n-1.
 */
SupportReport laurent_support_report(int n);

/**
 * (1/2 pi i) of the contour integral of numerator / F over the unit circle,
 * when every zero of F lies inside the disk. `numerator` may carry a single
 * z^{-1} term, handled through 1/(zF) = (1/F(0))(1/z - ((F-F(0))/z)/F).
 */
Rational contour_reduce_inside(const ExactPoly &numerator, const ExactPoly &f);

/// Same integral for G with every zero outside the closed disk.
Rational contour_reduce_outside(const ExactPoly &numerator,
                                const ExactPoly &g);

/**
 * (1/2 pi i) of the contour integral of 2(n+1) z^{2n-1} P_k(J(z)) / (F_n G_n),
 * computed only from coefficient extraction. Equals 2 for k = 0 and 0 for
 * 1 <= k <= 2n. Requires n >= 1 and 0 <= k <= 2n.
 */
Rational moment_exact(int n, int k);

/// moment_exact(n, k) for k = 0..2n, sharing one family build.
std::vector<Rational> moments_exact(int n);

/// 2 a_0 for P_i^* P_j^* = sum_k a_k P_k, reached through the exact moments.
ScaledRoot orthogonality_exact(int n, int i, int j);
ScaledRoot orthogonality_exact(const std::vector<Rational> &moments, int i,
                               int j);

/**
 * Top coefficient (z^{2n-1}) of C_n against lc(F_n) = 2^{-2n}(2n+1)C(2n,n),
 * and the z^{-1} coefficient of D_n against G_n(0).
 */
std::array<Certificate, 2> leading_coefficient_checks(int n);

/// One certificate per k = 0..2n; passes iff the moment is 2 delta_{k,0}.
std::vector<Certificate> moment_certificates(int n);

/// Passes iff orthogonality_exact(n, i, j) = delta_ij for all 0 <= i, j <= n.
Certificate theorem_certificate(int n);

} // namespace legortho
