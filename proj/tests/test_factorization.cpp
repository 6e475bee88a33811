#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "legortho/christoffel.hpp"
#include "legortho/factorization.hpp"

namespace legortho {
namespace {

using Complex = std::complex<double>;

ExactPoly even(std::vector<Rational> by_power_of_z2) {
  return substitute_power(ExactPoly::polynomial(std::move(by_power_of_z2)), 2);
}

// Oracle: exact Schur-Cohn recursion. True iff every zero of the real
// polynomial lies strictly inside the unit disk.
bool schur_cohn_inside(ExactPoly p) {
  while (p.degree() > 0) {
    const Rational a0 = p.coeff(0), ad = p.leading_coefficient();
    if (abs(a0) >= abs(ad)) {
      return false;
    }
    const int d = p.degree();
    const ExactPoly reversed = shift(reciprocal_substitution(p), d);
    p = shift(p * ad - reversed * a0, -1);
    if (p.degree() != d - 1) {
      return false;
    }
  }
  return true;
}

bool is_dyadic(const Rational &r) {
  Integer d = denominator(r);
  return (d & (d - 1)) == 0;
}

TEST(Fn, FromDefinition) {
  EXPECT_EQ(fn_from_definition(0), ExactPoly::constant(1));
  EXPECT_EQ(fn_from_definition(1), even({Rational(1, 2), Rational(3, 2)}));
  EXPECT_EQ(fn_from_definition(2),
            even({Rational(3, 8), Rational(6, 8), Rational(15, 8)}));
}

TEST(Fn, ClosedCoefficients) {
  EXPECT_EQ(fn_closed_coeffs(1), even({Rational(2, 4), Rational(6, 4)}));
  EXPECT_EQ(fn_closed_coeffs(2),
            even({Rational(6, 16), Rational(12, 16), Rational(30, 16)}));
  for (int n = 0; n <= 40; ++n) {
    EXPECT_TRUE(check_fn_closed_form(n).passed) << n;
  }
}

TEST(Fn, CoefficientsArePositiveDyadic) {
  for (int n = 0; n <= 40; ++n) {
    const auto f = fn_from_definition(n);
    EXPECT_EQ(f.degree(), 2 * n);
    for (int e = 0; e <= 2 * n; ++e) {
      const Rational c = f.coeff(e);
      if (e % 2 == 1) {
        EXPECT_EQ(c, 0);
      } else {
        EXPECT_GT(c, 0);
        EXPECT_TRUE(is_dyadic(c)) << c.str();
      }
    }
  }
}

TEST(Gn, Constructions) {
  EXPECT_EQ(gn_build(1), even({Rational(3, 2), Rational(1, 2)}));
  EXPECT_EQ(gn_build(2),
            even({Rational(15, 8), Rational(6, 8), Rational(3, 8)}));
  EXPECT_EQ(gn_build(2).coeff(0), Rational(5) * fn_from_definition(2).coeff(0));
  for (int n = 0; n <= 40; ++n) {
    EXPECT_EQ(gn_from_reversed_coefficients(n), gn_build(n));
    EXPECT_EQ(gn_from_ratio_rule(n), gn_build(n));
    const auto cert = check_coefficient_reversal(n);
    EXPECT_TRUE(cert.passed) << n << " " << cert.detail;

    auto fc = fn_from_definition(n).coefficients();
    auto gc = gn_build(n).coefficients();
    std::sort(fc.begin(), fc.end());
    std::sort(gc.begin(), gc.end());
    EXPECT_EQ(fc, gc);
  }
}

TEST(FejerRiesz, HandExpansions) {
  EXPECT_TRUE(check_fejer_riesz(0).passed);
  // K_1(J(z)) = (10 + 3z^2 + 3z^-2)/16.
  const ExactPoly k1 = ExactPoly(-2, {3, 0, 10, 0, 3}) / Rational(16);
  EXPECT_EQ(compose_joukowski(kn_exact(1)), k1);
  const auto f1 = fn_from_definition(1);
  EXPECT_EQ(f1 * reciprocal_substitution(f1) / Rational(4), k1);
}

TEST(FejerRiesz, HoldsUpTo40) {
  for (int n = 0; n <= 40; ++n) {
    EXPECT_TRUE(check_fejer_riesz(n).passed) << n;
  }
}

TEST(FnGnAlternate, ExactAndFloating) {
  for (int n = 1; n <= 20; ++n) {
    for (const auto &c : check_fn_gn_alt(n)) {
      EXPECT_TRUE(c.passed) << c.identity << " n=" << n;
    }
  }
  const Complex z(0.7, 0.2);
  for (int n = 1; n <= 12; ++n) {
    const auto pair = factor_pair(n);
    const Complex f = evaluate(cast<double>(pair.f), z);
    const Complex g = evaluate(cast<double>(pair.g), z);
    EXPECT_LT(std::abs(fn_alternate_eval(n, z) - f), 1e-12 * std::abs(f)) << n;
    EXPECT_LT(std::abs(gn_alternate_eval(n, z) - g), 1e-12 * std::abs(g)) << n;
  }
  EXPECT_THROW(check_fn_gn_alt(0), std::invalid_argument);
}

TEST(Ode, HandExpansionAtOne) {
  const ExactPoly z = ExactPoly::monomial(1, 1);
  const ExactPoly one = ExactPoly::constant(1);
  const ExactPoly f1 = (one + z * z * Rational(3)) / Rational(2);
  const ExactPoly lhs = z * (one - z * z) * Rational(3) +
                        (z * z * Rational(-1) - one) * Rational(2) * z * Rational(3) +
                        z * f1 * Rational(6);
  EXPECT_TRUE(lhs.is_zero());
}

TEST(Ode, HoldsUpTo40) {
  for (int n = 1; n <= 40; ++n) {
    EXPECT_TRUE(check_ode(n).passed) << n;
  }
}

TEST(Hypergeometric, SeriesAndScaling) {
  EXPECT_EQ(hypergeometric_series(1), ExactPoly(0, {1, 3}));
  EXPECT_EQ(fn_hypergeometric(1), fn_from_definition(1));
  EXPECT_EQ(fn_hypergeometric(2), fn_from_definition(2));
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(hypergeometric_series(n).leading_coefficient(), Rational(2 * n + 1));
    const auto cert = hypergeometric_check(n);
    EXPECT_TRUE(cert.passed) << n << " " << cert.detail;
  }
}

TEST(Roots, DegreeOneMatchesQuadraticFormula) {
  const auto report = fn_roots(1);
  ASSERT_EQ(report.roots.size(), 2u);
  const double r = 1.0 / std::sqrt(3.0);
  std::vector<double> imag{report.roots[0].z.imag(), report.roots[1].z.imag()};
  std::sort(imag.begin(), imag.end());
  EXPECT_NEAR(imag[0], -r, 1e-12);
  EXPECT_NEAR(imag[1], r, 1e-12);
  for (const auto &root : report.roots) {
    EXPECT_NEAR(root.z.real(), 0.0, 1e-12);
    EXPECT_NEAR(root.modulus, r, 1e-12);
  }
}

TEST(Roots, DegreeTwoMatchesQuarticOracle) {
  // 15w^2 + 6w + 3 = 0 gives w = (-1 +- 2i)/5.
  const auto report = fn_roots(2);
  ASSERT_EQ(report.roots.size(), 4u);
  for (const auto &root : report.roots) {
    EXPECT_NEAR(root.modulus, std::pow(5.0, -0.25), 1e-12);
    const Complex w = root.z * root.z;
    EXPECT_NEAR(w.real(), -0.2, 1e-12);
    EXPECT_NEAR(std::abs(w.imag()), 0.4, 1e-12);
  }
}

TEST(Roots, CertifiedInsideDiskUpTo20) {
  for (int n = 1; n <= 20; ++n) {
    const auto report = fn_roots(n);
    EXPECT_EQ(report.roots.size(), static_cast<std::size_t>(2 * n));
    EXPECT_TRUE(report.certified()) << n;
    EXPECT_TRUE(schur_cohn_inside(decimate(fn_from_definition(n), 2))) << n;
    for (const auto &root : report.roots) {
      EXPECT_LT(root.residual, 1e-10 * root.residual_scale);
      // F_n has real coefficients and is even: -z and conj(z) are roots.
      const auto has = [&](Complex target) {
        return std::any_of(report.roots.begin(), report.roots.end(),
                           [&](const RootInfo &r) {
                             return std::abs(r.z - target) < 1e-10;
                           });
      };
      EXPECT_TRUE(has(-root.z));
      EXPECT_TRUE(has(std::conj(root.z)));
    }
  }
  EXPECT_THROW(fn_roots(0), std::invalid_argument);
}

TEST(Roots, SchurCohnOracleRejectsOutsideRoots) {
  EXPECT_FALSE(schur_cohn_inside(ExactPoly(0, {Rational(-2), 1})));
  EXPECT_FALSE(schur_cohn_inside(ExactPoly(0, {1, 0, 1})));
  EXPECT_TRUE(schur_cohn_inside(ExactPoly(0, {Rational(1, 4), 0, 1})));
  // G_n's zeros are the reciprocals of F_n's.
  EXPECT_FALSE(schur_cohn_inside(decimate(gn_build(3), 2)));
}

TEST(Roots, KnBoundedAwayFromZeroOnCircle) {
  for (int n = 1; n <= 20; ++n) {
    const ChristoffelEvaluator kn(n);
    double smallest = 1e300;
    for (int m = 0; m < 2048; ++m) {
      smallest = std::min(smallest, kn(std::cos(2 * std::numbers::pi * m / 2048)));
    }
    EXPECT_GT(smallest, 0.0);
  }
}

} // namespace
} // namespace legortho
