#pragma once

#include <Eigen/Dense>

#include "legortho/certificate.hpp"
#include "legortho/legendre.hpp"

namespace legortho {

/// Equivalent constructions of K_n(x) = (1/(n+1)) sum_{k<=n} P_k^*(x)^2.
enum class ChristoffelMode {
  /// The defining sum of squares. Strictly positive on [-1, 1].
  sum,
  /// (P_{n+1}'P_n - P_{n+1}P_n') / 2.
  christoffel_darboux,
  /// ((n+1)^2 P_n^2 - (x^2-1) P_n'^2) / (2(n+1)).
  closed_form,
};

const char *to_string(ChristoffelMode mode);

class ChristoffelEvaluator {
public:
  explicit ChristoffelEvaluator(int n, ChristoffelMode mode = ChristoffelMode::sum);

  int degree() const noexcept { return n_; }
  ChristoffelMode mode() const noexcept { return mode_; }

  /// K_n(x); every mode is a polynomial identity and accepts complex x.
  template <typename T> T operator()(T x) const;

private:
  int n_;
  ChristoffelMode mode_;
};

template <typename T> T ChristoffelEvaluator::operator()(T x) const {
  const T np1(n_ + 1);
  switch (mode_) {
  case ChristoffelMode::sum: {
    const auto p = legendre_values(n_, x);
    T acc(0);
    for (int k = 0; k <= n_; ++k) {
      acc += T(k + 0.5) * p[k] * p[k];
    }
    return acc / np1;
  }
  case ChristoffelMode::christoffel_darboux: {
    const auto pn = legendre_eval(n_, x);
    const auto pn1 = legendre_eval(n_ + 1, x);
    return (pn1.derivative * pn.value - pn1.value * pn.derivative) / T(2);
  }
  case ChristoffelMode::closed_form: {
    const auto pn = legendre_eval(n_, x);
    return (np1 * np1 * pn.value * pn.value -
            (x * x - T(1)) * pn.derivative * pn.derivative) /
           (T(2) * np1);
  }
  }
  return T(0);
}

template <typename T>
T kn_eval(const ChristoffelEvaluator &evaluator, T x) {
  return evaluator(x);
}

/// Exact coefficients of K_n in the monomial basis, built by `mode`.
ExactPoly kn_exact(int n, ChristoffelMode mode = ChristoffelMode::sum);

/// The three exact constructions of K_n coincide.
Certificate check_kn_identity(int n);

/// Q_j(x) = P_j^*(x) / sqrt(K_n(x)) for x in [-1, 1].
double q_basis_eval(int n, int j, double x);

/// (Q_0(x), ..., Q_n(x)).
Eigen::VectorXd q_basis_row(int n, double x);

} // namespace legortho
