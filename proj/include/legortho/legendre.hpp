#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "legortho/certificate.hpp"
#include "legortho/laurent.hpp"
#include "legortho/rational.hpp"

namespace legortho {

template <typename T> struct LegendreValue {
  T value;
  T derivative;
};

/**
 * P_n(x) and P_n'(x) by the forward three-term recurrence and its
 * derivative, from P_0 = 1 and P_1 = x. T may be real or complex.
 */
template <typename T> LegendreValue<T> legendre_eval(int n, T x) {
  T p_prev(1), p(x);
  T d_prev(0), d(1);
  if (n == 0) {
    return {p_prev, d_prev};
  }
  for (int m = 1; m < n; ++m) {
    const T a(2 * m + 1), b(m), c(m + 1);
    T p_next = (a * x * p - b * p_prev) / c;
    T d_next = (a * (p + x * d) - b * d_prev) / c;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
  }
  return {p, d};
}

/// P_0(x), ..., P_n(x).
template <typename T> std::vector<T> legendre_values(int n, T x) {
  std::vector<T> out(static_cast<std::size_t>(n) + 1);
  out[0] = T(1);
  if (n >= 1) {
    out[1] = x;
  }
  for (int m = 1; m < n; ++m) {
    out[m + 1] = (T(2 * m + 1) * x * out[m] - T(m) * out[m - 1]) / T(m + 1);
  }
  return out;
}

/// sqrt((2n+1)/2), the factor turning P_n into the orthonormal P_n^*.
inline double legendre_normalization(int n) {
  return std::sqrt((2.0 * n + 1.0) / 2.0);
}

double legendre_normalized_eval(int n, double x);

/// Exact monomial coefficients of P_n from the explicit binomial sum.
ExactPoly legendre_exact(int n);

/// P_0, ..., P_{n_max} as exact polynomials.
std::vector<ExactPoly> legendre_exact_table(int n_max);

/// P_n(J(z)) with J(z) = (z + 1/z)/2, as an exact Laurent polynomial.
ExactPoly legendre_on_circle(int n);

/**
 * Exact residual checks, for each 1 <= n <= n_max, of the Christoffel-Darboux
 * sum, the three-term recurrence, its derivative, (x^2-1)P_n' =
 * n(xP_n - P_{n-1}) and (2n+1)P_n = P_{n+1}' - P_{n-1}'.
 */
std::vector<Certificate> check_legendre_identities(int n_max);

/// factor * sqrt(radicand) with a squarefree radicand >= 1.
class ScaledRoot {
public:
  ScaledRoot() = default;
  ScaledRoot(Rational factor, Integer radicand);

  const Rational &factor() const noexcept { return factor_; }
  const Integer &radicand() const noexcept { return radicand_; }
  bool is_rational() const { return radicand_ == 1 || factor_ == 0; }
  double to_double() const;
  std::string str() const;

  friend ScaledRoot operator*(const ScaledRoot &a, const Rational &r) {
    return ScaledRoot(a.factor_ * r, a.radicand_);
  }
  friend bool operator==(const ScaledRoot &a, const ScaledRoot &b) {
    return a.factor_ == b.factor_ &&
           (a.factor_ == 0 || a.radicand_ == b.radicand_);
  }

private:
  Rational factor_ = 0;
  Integer radicand_ = 1;
};

/**
 * Coefficients in the Legendre basis. `coefficients[k]` multiplies P_k; the
 * whole expansion is scaled by `normalization`, which carries the
 * irrational part of products of orthonormal polynomials.
 */
struct LegendreExpansion {
  std::vector<Rational> coefficients;
  ScaledRoot normalization{Rational(1), Integer(1)};

  int max_degree() const { return static_cast<int>(coefficients.size()) - 1; }
  ScaledRoot coefficient(int k) const;
};

/// Legendre coefficients of x * sum_k b_k P_k.
std::vector<Rational> multiply_by_x(std::span<const Rational> coefficients);

/// P_i^* P_j^* = sum_k a_k P_k, with a_0 = delta_ij / 2.
LegendreExpansion legendre_product_expand(int i, int j);

} // namespace legortho
