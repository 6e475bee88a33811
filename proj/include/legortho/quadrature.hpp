#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace legortho {

struct QuadratureOptions {
  int base_points = 64;
  int max_points = 1 << 20;
};

/// Inner products (1/2pi) int_0^{2pi} P_i^* P_j^* / K_n (cos t) dt.
struct OrthoReport {
  int n = 0;
  Eigen::MatrixXd gram;
  double max_offdiag = 0.0;
  double max_diag_dev = 0.0;
  int points_used = 0;
  double tol = 0.0;
  /// Entries (i <= j) whose refinement never met tol / 10.
  std::vector<std::pair<int, int>> unconverged;
  /// Largest entry change at each doubling, finest last.
  std::vector<double> refinement_deltas;

  bool converged() const { return unconverged.empty(); }
  double max_deviation() const { return std::max(max_offdiag, max_diag_dev); }
  bool passed() const { return converged() && max_deviation() < tol; }
};

/**
 * Periodic trapezoid rule on a uniform grid in t, doubled until every entry
 * changes by less than tol / 10 or the point cap is reached. Halving reuses
 * the previous samples.
 */
OrthoReport orthogonality_numeric(int n, double tol,
                                  QuadratureOptions options = {});

struct ContourResult {
  std::complex<double> value;
  int points_used = 0;
  bool converged = false;
};

/**
 * (1/2 pi i) times the contour integral of f over the counter-clockwise unit
 * circle, by the trapezoid rule in t with z = e^{it}: the mean of f(z) z.
 */
ContourResult contour_integral_numeric(
    const std::function<std::complex<double>(std::complex<double>)> &f,
    double tol, QuadratureOptions options = {});

/**
 * (1/2 pi i) of the contour integral of 2(n+1) z^{2n-1} P_k(J(z)) / (F_n G_n).
 * Throws std::runtime_error when the refinement does not converge.
 */
std::complex<double> contour_moment_numeric(int n, int k, double tol = 1e-13,
                                            QuadratureOptions options = {});

/**
 * int_{-1}^{1} P_i^* P_j^* / (K_n(x) pi sqrt(1-x^2)) dx by Gauss-Chebyshev
 * nodes in x, refined by doubling.
 */
double interval_form_numeric(int n, int i, int j, double tol = 1e-14,
                             QuadratureOptions options = {});

} // namespace legortho
