#include "legortho/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "legortho/christoffel.hpp"
#include "legortho/legendre.hpp"

namespace legortho {

namespace {

using Complex = std::complex<double>;

void require_degree(int n, int minimum, const char *what) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(what) + ": degree too small");
  }
}

ExactPoly monomial(long long c, int e) {
  return ExactPoly::monomial(Rational(c), e);
}

Rational rising(const Rational &x, int k) {
  Rational acc(1);
  for (int i = 0; i < k; ++i) {
    acc *= x + Rational(i);
  }
  return acc;
}

// F_n as the polynomial f_n(w) with F_n(z) = f_n(z^2).
std::vector<double> even_part_coefficients(int n) {
  const auto w = decimate(fn_from_definition(n), 2);
  std::vector<double> out;
  for (int k = 0; k <= n; ++k) {
    out.push_back(to_double(w.coeff(k)));
  }
  return out;
}

Complex horner(const std::vector<double> &c, Complex x) {
  Complex acc(0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Complex horner_derivative(const std::vector<double> &c, Complex x) {
  Complex acc(0.0);
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    acc = acc * x + c[k] * static_cast<double>(k);
  }
  return acc;
}

std::vector<Complex> companion_roots(const std::vector<double> &c) {
  const int d = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) {
    companion(i, i - 1) = 1.0;
  }
  for (int i = 0; i < d; ++i) {
    companion(i, d - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("fn_roots: companion eigensolver failed");
  }
  const Eigen::VectorXcd values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

void aberth_polish(const std::vector<double> &c, std::vector<Complex> &roots) {
  constexpr int max_iterations = 100;
  for (int iter = 0; iter < max_iterations; ++iter) {
    double largest_step = 0.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const Complex p = horner(c, roots[i]);
      const Complex dp = horner_derivative(c, roots[i]);
      if (p == Complex(0.0)) {
        continue;
      }
      const Complex ratio = p / dp;
      Complex repulsion(0.0);
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j != i) {
          repulsion += 1.0 / (roots[i] - roots[j]);
        }
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      roots[i] -= step;
      largest_step =
          std::max(largest_step, std::abs(step) / std::max(1.0, std::abs(roots[i])));
    }
    if (largest_step < 4 * std::numeric_limits<double>::epsilon()) {
      break;
    }
  }
}

} // namespace

ExactPoly fn_from_definition(int n) {
  require_degree(n, 0, "fn_from_definition");
  return derivative(shift(legendre_on_circle(n), n + 1));
}

ExactPoly fn_closed_coeffs(int n) {
  require_degree(n, 0, "fn_closed_coeffs");
  const unsigned un = static_cast<unsigned>(n);
  std::vector<Rational> c(2 * un + 1, Rational(0));
  for (unsigned k = 0; k <= un; ++k) {
    c[2 * k] = Rational((2 * k + 1) * binomial(2 * k, k) *
                        binomial(2 * un - 2 * k, un - k));
  }
  return ExactPoly::polynomial(std::move(c)) * power_of_two(-2 * n);
}

ExactPoly hypergeometric_series(int n) {
  require_degree(n, 0, "hypergeometric_series");
  const Rational a(-n), b(3, 2), c = Rational(1, 2) - Rational(n);
  std::vector<Rational> terms;
  for (int k = 0; k <= n; ++k) {
    const Rational ck = rising(c, k);
    if (ck == 0) {
      throw std::domain_error("hypergeometric_series: (c)_k vanishes");
    }
    terms.push_back(rising(a, k) * rising(b, k) /
                    (ck * Rational(factorial(static_cast<unsigned>(k)))));
  }
  return ExactPoly::polynomial(std::move(terms));
}

ExactPoly fn_hypergeometric(int n) {
  const Rational scale = power_of_two(-2 * n) *
                         Rational(binomial(2 * static_cast<unsigned>(n),
                                           static_cast<unsigned>(n)));
  return substitute_power(hypergeometric_series(n), 2) * scale;
}

ExactPoly gn_build(int n) {
  require_degree(n, 0, "gn_build");
  return shift(reciprocal_substitution(fn_from_definition(n)), 2 * n);
}

ExactPoly gn_from_reversed_coefficients(int n) {
  const auto f = fn_closed_coeffs(n);
  std::vector<Rational> c(2 * static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(2 * k)] = f.coeff(2 * (n - k));
  }
  return ExactPoly::polynomial(std::move(c));
}

ExactPoly gn_from_ratio_rule(int n) {
  const auto f = fn_closed_coeffs(n);
  std::vector<Rational> c(2 * static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(2 * k)] =
        Rational(2 * (n - k) + 1, 2 * k + 1) * f.coeff(2 * k);
  }
  return ExactPoly::polynomial(std::move(c));
}

FactorPair factor_pair(int n) {
  FactorPair pair;
  pair.n = n;
  pair.f = fn_from_definition(n);
  pair.g = shift(reciprocal_substitution(pair.f), 2 * n);
  return pair;
}

Certificate check_fejer_riesz(int n) {
  const auto f = fn_from_definition(n);
  const ExactPoly lhs = compose_joukowski(kn_exact(n));
  const ExactPoly rhs =
      f * reciprocal_substitution(f) / Rational(2 * (n + 1));
  return residual_certificate("fejer_riesz", n, std::nullopt, lhs - rhs);
}

Certificate check_fn_closed_form(int n) {
  return residual_certificate("fn_closed_form", n, std::nullopt,
                              fn_from_definition(n) - fn_closed_coeffs(n));
}

std::array<Certificate, 2> check_fn_gn_alt(int n) {
  require_degree(n, 1, "check_fn_gn_alt");
  const auto pair = factor_pair(n);
  const ExactPoly pn = legendre_on_circle(n);
  const ExactPoly pn1 = legendre_on_circle(n - 1);
  const ExactPoly z2m1 = monomial(1, 2) - monomial(1, 0);
  const ExactPoly two_n_z = monomial(2 * n, 1);

  const ExactPoly f_rhs =
      shift((monomial(2 * n + 1, 2) - monomial(1, 0)) * pn - two_n_z * pn1, n);
  const ExactPoly g_rhs =
      shift((monomial(1, 2) - monomial(2 * n + 1, 0)) * pn + two_n_z * pn1, n);
  return {
      residual_certificate("fn_alternate", n, std::nullopt,
                           z2m1 * pair.f - f_rhs),
      residual_certificate("gn_alternate", n, std::nullopt,
                           z2m1 * pair.g - g_rhs),
  };
}

std::complex<double> fn_alternate_eval(int n, std::complex<double> z) {
  const Complex j = (z + 1.0 / z) / 2.0;
  const Complex pn = legendre_eval(n, j).value;
  const Complex pn1 = legendre_eval(n - 1, j).value;
  const double dn = n;
  return std::pow(z, n) / (z * z - 1.0) *
         (((2 * dn + 1) * z * z - 1.0) * pn - 2 * dn * z * pn1);
}

std::complex<double> gn_alternate_eval(int n, std::complex<double> z) {
  const Complex j = (z + 1.0 / z) / 2.0;
  const Complex pn = legendre_eval(n, j).value;
  const Complex pn1 = legendre_eval(n - 1, j).value;
  const double dn = n;
  return std::pow(z, n) / (z * z - 1.0) *
         ((z * z - (2 * dn + 1)) * pn + 2 * dn * z * pn1);
}

Certificate check_ode(int n) {
  require_degree(n, 1, "check_ode");
  const auto f = fn_from_definition(n);
  const auto df = derivative(f);
  const auto d2f = derivative(df);
  const ExactPoly z_minus_z3 = monomial(1, 1) - monomial(1, 3);
  const ExactPoly middle = monomial(2 * (n - 2), 2) - monomial(2 * n, 0);
  const ExactPoly residual =
      z_minus_z3 * d2f + middle * df + monomial(6 * n, 1) * f;
  return residual_certificate("fn_ode", n, std::nullopt, residual);
}

Certificate hypergeometric_check(int n) {
  require_degree(n, 1, "hypergeometric_check");
  const unsigned un = static_cast<unsigned>(n);
  const Rational a(-n), b(3, 2), c = Rational(1, 2) - Rational(n);
  std::size_t mismatches = 0;
  for (unsigned k = 0; k <= un; ++k) {
    const int ik = static_cast<int>(k);
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    const Rational a_closed =
        sign * Rational(factorial(un)) / Rational(factorial(un - k));
    const Rational b_closed = power_of_two(-2 * ik) *
                              Rational(factorial(2 * k + 1)) /
                              Rational(factorial(k));
    const Rational c_closed =
        sign * power_of_two(-2 * ik) *
        Rational(factorial(2 * un) * factorial(un - k)) /
        Rational(factorial(2 * un - 2 * k) * factorial(un));
    const Rational term_closed = Rational((2 * k + 1) * binomial(un, k) *
                                          binomial(un, k)) /
                                 Rational(binomial(2 * un, 2 * k));
    if (rising(a, ik) != a_closed || rising(b, ik) != b_closed ||
        rising(c, ik) != c_closed) {
      ++mismatches;
    }
    if (rising(a, ik) * rising(b, ik) /
            (rising(c, ik) * Rational(factorial(k))) !=
        term_closed) {
      ++mismatches;
    }
  }
  const ExactPoly series = hypergeometric_series(n);
  const bool leading_ok = series.degree() == n &&
                          series.leading_coefficient() == Rational(2 * n + 1);
  const ExactPoly residual = fn_hypergeometric(n) - fn_closed_coeffs(n);
  Certificate cert =
      residual_certificate("fn_hypergeometric", n, std::nullopt, residual);
  cert.passed = cert.passed && leading_ok && mismatches == 0;
  cert.detail = "leading=" + series.leading_coefficient().str() +
                ", rising_factorial_mismatches=" + std::to_string(mismatches);
  return cert;
}

Certificate check_coefficient_reversal(int n) {
  const auto pair = factor_pair(n);
  const ExactPoly r1 = pair.g - gn_from_reversed_coefficients(n);
  const ExactPoly r2 = pair.g - gn_from_ratio_rule(n);
  const ExactPoly r3 = pair.g - gn_build(n);
  const Rational f0 = pair.f.coeff(0);
  const Rational g0 = pair.g.coeff(0);
  const Rational f0_closed =
      power_of_two(-2 * n) *
      Rational(binomial(2 * static_cast<unsigned>(n), static_cast<unsigned>(n)));

  bool shape_ok = pair.f.degree() == 2 * n && pair.f.min_exponent() == 0;
  for (int e = 0; e <= 2 * n; ++e) {
    const Rational c = pair.f.coeff(e);
    shape_ok = shape_ok && (e % 2 == 0 ? c > 0 : c == 0);
  }
  const bool values_ok = g0 == Rational(2 * n + 1) * f0 && f0 == f0_closed;

  Certificate cert =
      residual_certificate("coefficient_reversal", n, std::nullopt, r1);
  cert.residual_terms += r2.term_count() + r3.term_count();
  cert.passed = r1.is_zero() && r2.is_zero() && r3.is_zero() && shape_ok &&
                values_ok;
  cert.detail = "F(0)=" + f0.str() + ", G(0)=" + g0.str();
  return cert;
}

bool RootReport::all_converged() const {
  return std::all_of(roots.begin(), roots.end(),
                     [](const RootInfo &r) { return r.converged; });
}

RootReport fn_roots(int n) {
  require_degree(n, 1, "fn_roots");
  const auto w_coeffs = even_part_coefficients(n);
  auto w_roots = companion_roots(w_coeffs);
  aberth_polish(w_coeffs, w_roots);

  std::vector<double> z_coeffs(2 * static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    z_coeffs[static_cast<std::size_t>(2 * k)] =
        w_coeffs[static_cast<std::size_t>(k)];
  }

  RootReport report;
  report.n = n;
  for (const Complex &w : w_roots) {
    const Complex s = std::sqrt(w);
    for (Complex z : {s, -s}) {
      for (int step = 0; step < 3; ++step) {
        const Complex value = horner(z_coeffs, z);
        const Complex slope = horner_derivative(z_coeffs, z);
        const Complex candidate = z - value / slope;
        if (!(std::abs(horner(z_coeffs, candidate)) < std::abs(value))) {
          break;
        }
        z = candidate;
      }
      RootInfo info;
      info.z = z;
      info.modulus = std::abs(z);
      info.residual = std::abs(horner(z_coeffs, z));
      for (int k = 0; k <= n; ++k) {
        info.residual_scale += std::abs(w_coeffs[static_cast<std::size_t>(k)]) *
                               std::pow(info.modulus, 2 * k);
      }
      info.converged = info.residual <= 1e-10 * info.residual_scale;
      report.roots.push_back(info);
    }
  }
  std::sort(report.roots.begin(), report.roots.end(),
            [](const RootInfo &a, const RootInfo &b) {
              return std::arg(a.z) < std::arg(b.z);
            });

  report.min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    report.max_modulus = std::max(report.max_modulus, report.roots[i].modulus);
    for (std::size_t j = i + 1; j < report.roots.size(); ++j) {
      report.min_separation = std::min(
          report.min_separation, std::abs(report.roots[i].z - report.roots[j].z));
    }
  }
  return report;
}

} // namespace legortho
