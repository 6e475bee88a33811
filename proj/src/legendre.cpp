#include "legortho/legendre.hpp"

#include <stdexcept>

namespace legortho {

namespace {

ExactPoly x_poly() { return ExactPoly::monomial(Rational(1), 1); }

ExactPoly constant(long long c) { return ExactPoly::constant(Rational(c)); }

Integer squarefree_part(Integer value, Integer &extracted) {
  extracted = 1;
  for (Integer d = 2; d * d <= value; ++d) {
    while (value % (d * d) == 0) {
      value /= d * d;
      extracted *= d;
    }
  }
  return value;
}

} // namespace

double legendre_normalized_eval(int n, double x) {
  return legendre_normalization(n) * legendre_eval(n, x).value;
}

ExactPoly legendre_exact(int n) {
  if (n < 0) {
    throw std::invalid_argument("legendre_exact: negative degree");
  }
  const unsigned un = static_cast<unsigned>(n);
  std::vector<Rational> c(un + 1, Rational(0));
  for (unsigned k = 0; 2 * k <= un; ++k) {
    Integer term = binomial(un, k) * binomial(2 * un - 2 * k, un);
    c[un - 2 * k] = Rational(k % 2 == 0 ? term : Integer(-term));
  }
  return ExactPoly::polynomial(std::move(c)) * power_of_two(-n);
}

std::vector<ExactPoly> legendre_exact_table(int n_max) {
  std::vector<ExactPoly> table;
  table.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    table.push_back(legendre_exact(n));
  }
  return table;
}

ExactPoly legendre_on_circle(int n) {
  return compose_joukowski(legendre_exact(n));
}

std::vector<Certificate> check_legendre_identities(int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("check_legendre_identities: n_max < 1");
  }
  const auto p = legendre_exact_table(n_max + 1);
  std::vector<ExactPoly> dp;
  for (const auto &q : p) {
    dp.push_back(derivative(q));
  }
  const ExactPoly x = x_poly();

  std::vector<Certificate> out;
  ExactPoly weighted_sum;
  weighted_sum += p[0] * p[0] * Rational(1, 2);
  for (int n = 1; n <= n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    weighted_sum += p[un] * p[un] * Rational(2 * n + 1, 2);

    // The sum runs over squares of the orthonormal polynomials.
    const ExactPoly cd =
        weighted_sum - (dp[un + 1] * p[un] - p[un + 1] * dp[un]) *
                           Rational(n + 1, 2);
    out.push_back(residual_certificate("legendre_christoffel_darboux", n,
                                       std::nullopt, cd));

    const ExactPoly rec = constant(n + 1) * p[un + 1] -
                          constant(2 * n + 1) * x * p[un] +
                          constant(n) * p[un - 1];
    out.push_back(
        residual_certificate("legendre_three_term", n, std::nullopt, rec));

    const ExactPoly drec = constant(n + 1) * dp[un + 1] -
                           constant(2 * n + 1) * (p[un] + x * dp[un]) +
                           constant(n) * dp[un - 1];
    out.push_back(residual_certificate("legendre_differentiated_three_term", n,
                                       std::nullopt, drec));

    const ExactPoly christ = (x * x - constant(1)) * dp[un] -
                             constant(n) * (x * p[un] - p[un - 1]);
    out.push_back(
        residual_certificate("legendre_christoffel", n, std::nullopt, christ));

    const ExactPoly ichrist =
        constant(2 * n + 1) * p[un] - (dp[un + 1] - dp[un - 1]);
    out.push_back(residual_certificate("legendre_integrated", n, std::nullopt,
                                       ichrist));
  }
  return out;
}

ScaledRoot::ScaledRoot(Rational factor, Integer radicand)
    : factor_(std::move(factor)) {
  if (radicand < 1) {
    throw std::invalid_argument("ScaledRoot: radicand must be positive");
  }
  Integer extracted;
  radicand_ = squarefree_part(std::move(radicand), extracted);
  factor_ *= Rational(extracted);
  if (factor_ == 0) {
    radicand_ = 1;
  }
}

double ScaledRoot::to_double() const {
  return static_cast<double>(factor_) *
         std::sqrt(static_cast<double>(radicand_));
}

std::string ScaledRoot::str() const {
  if (is_rational()) {
    return factor_.str();
  }
  return factor_.str() + "*sqrt(" + radicand_.str() + ")";
}

ScaledRoot LegendreExpansion::coefficient(int k) const {
  if (k < 0 || k > max_degree()) {
    return ScaledRoot();
  }
  return normalization * coefficients[static_cast<std::size_t>(k)];
}

std::vector<Rational> multiply_by_x(std::span<const Rational> coefficients) {
  std::vector<Rational> out(coefficients.size() + 1, Rational(0));
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] == 0) {
      continue;
    }
    const Rational scale = coefficients[k] / Rational(2 * k + 1);
    out[k + 1] += scale * Rational(k + 1);
    if (k > 0) {
      out[k - 1] += scale * Rational(k);
    }
  }
  while (!out.empty() && out.back() == 0) {
    out.pop_back();
  }
  return out;
}

LegendreExpansion legendre_product_expand(int i, int j) {
  if (i < 0 || j < 0) {
    throw std::invalid_argument("legendre_product_expand: negative degree");
  }
  // E_m holds the Legendre coefficients of P_m * P_j.
  std::vector<Rational> prev(static_cast<std::size_t>(j) + 1, Rational(0));
  prev.back() = 1;
  std::vector<Rational> cur = multiply_by_x(prev);
  if (i == 0) {
    cur = prev;
  }
  for (int m = 1; m < i; ++m) {
    std::vector<Rational> next = multiply_by_x(cur);
    for (auto &c : next) {
      c *= Rational(2 * m + 1, m + 1);
    }
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k] -= prev[k] * Rational(m, m + 1);
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  LegendreExpansion out;
  out.coefficients = std::move(cur);
  out.normalization =
      ScaledRoot(Rational(1, 2), Integer((2 * i + 1) * (2 * j + 1)));
  return out;
}

} // namespace legortho
