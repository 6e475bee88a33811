#include <random>

#include <gtest/gtest.h>

#include "legortho/partial_fractions.hpp"
#include "legortho/quadrature.hpp"

namespace legortho {
namespace {

ExactPoly z(int e) { return ExactPoly::monomial(Rational(1), e); }

TEST(Abcd, DegreeOneFamily) {
  const auto fam = build_abcd(1, 1);
  EXPECT_EQ(fam.a[1], z(-1));
  EXPECT_EQ(fam.b[1], z(1));
  EXPECT_EQ(fam.c[1], (z(1) * Rational(3) - z(-1)) / Rational(2));
  EXPECT_EQ(fam.d[1], (z(-1) * Rational(3) - z(1)) / Rational(2));
}

TEST(Abcd, DegreeTwoAndCommonBase) {
  const auto fam = build_abcd(2, 2);
  EXPECT_EQ(fam.c[1], (z(2) * Rational(5) - z(0)) / Rational(4));
  for (int n = 1; n <= 10; ++n) {
    const auto f = build_abcd(n, 1);
    EXPECT_EQ(f.a[0], f.c[0]);
    EXPECT_EQ(f.b[0], f.d[0]);
    EXPECT_EQ(f.a[0], z(n - 1));
    EXPECT_EQ(f.c.size(), static_cast<std::size_t>(n + 1));
  }
  EXPECT_THROW(build_abcd(0, 1), std::invalid_argument);
  EXPECT_THROW(build_abcd(2, 0), std::invalid_argument);
}

TEST(PartialFractions, PlusHandExpansion) {
  // A_1 G_1 + B_1 F_1 = (3z^3 + 2z + 3z^-1)/2 = 4z P_2(J(z)).
  const auto pair = factor_pair(1);
  const auto fam = build_abcd(1, 1);
  const ExactPoly sum = fam.a[1] * pair.g + fam.b[1] * pair.f;
  EXPECT_EQ(sum, ExactPoly(-1, {3, 0, 2, 0, 3}) / Rational(2));
  EXPECT_EQ(sum, shift(legendre_on_circle(2), 1) * Rational(4));
  EXPECT_TRUE(check_pfd_plus(1, 1).passed);
}

TEST(PartialFractions, MinusHandExpansion) {
  const auto pair = factor_pair(1);
  const auto fam = build_abcd(1, 1);
  EXPECT_EQ(fam.c[1] * pair.g + fam.d[1] * pair.f, z(1) * Rational(4));
  EXPECT_TRUE(check_pfd_minus(1, 1).passed);
  EXPECT_TRUE(check_pfd_minus(2, 2).passed);
  EXPECT_THROW(check_pfd_minus(2, 3), std::out_of_range);
}

TEST(PartialFractions, CommonBaseUpTo40) {
  for (int n = 1; n <= 40; ++n) {
    EXPECT_TRUE(check_pfd_plus(n, 0).passed) << n;
  }
}

TEST(PartialFractions, AllAdmissibleK) {
  for (int n = 1; n <= 12; ++n) {
    const auto fam = build_abcd(n, n + 2);
    const auto pair = factor_pair(n);
    for (int k = 0; k <= n + 2; ++k) {
      EXPECT_TRUE(check_pfd_plus(fam, pair, k).passed) << n << "," << k;
    }
    for (int k = 0; k <= n; ++k) {
      EXPECT_TRUE(check_pfd_minus(fam, pair, k).passed) << n << "," << k;
    }
  }
}

TEST(Support, StructuralClaims) {
  for (int n = 1; n <= 12; ++n) {
    const auto report = laurent_support_report(n);
    EXPECT_TRUE(report.certificate.passed) << n << report.certificate.detail;
    for (const auto &e : report.entries) {
      EXPECT_TRUE(e.within_displayed_bounds) << e.family << e.k << " n=" << n;
      if (e.family == 'B') {
        EXPECT_GE(e.min_exponent, 0);
      }
      if ((e.family == 'C' || e.family == 'D') && e.k == n) {
        EXPECT_EQ(e.min_exponent, -1);
        EXPECT_EQ(e.max_exponent, 2 * n - 1);
      }
    }
  }
  const auto fam = build_abcd(2, 2);
  EXPECT_GE(fam.b[2].min_exponent(), 1);
  EXPECT_LE(fam.b[2].degree(), 3);
  EXPECT_NE(fam.a[2].coeff(-1), 0);
}

TEST(Moments, DegreeOne) {
  EXPECT_EQ(moment_exact(1, 0), Rational(2));
  EXPECT_EQ(moment_exact(1, 1), Rational(0));
  EXPECT_EQ(moment_exact(1, 2), Rational(0));
  EXPECT_THROW(moment_exact(1, 3), std::out_of_range);
  EXPECT_THROW(moment_exact(0, 0), std::invalid_argument);
}

TEST(Moments, KroneckerUpTo12) {
  for (int n = 1; n <= 12; ++n) {
    const auto m = moments_exact(n);
    ASSERT_EQ(m.size(), static_cast<std::size_t>(2 * n + 1));
    for (int k = 0; k <= 2 * n; ++k) {
      EXPECT_EQ(m[static_cast<std::size_t>(k)], Rational(k == 0 ? 2 : 0))
          << n << "," << k;
    }
    for (const auto &c : moment_certificates(n)) {
      EXPECT_TRUE(c.passed);
    }
  }
}

TEST(Orthogonality, ExactExamples) {
  EXPECT_EQ(orthogonality_exact(2, 1, 1), ScaledRoot(Rational(1), 1));
  EXPECT_EQ(orthogonality_exact(2, 0, 1), ScaledRoot());
  EXPECT_THROW(orthogonality_exact(2, 3, 0), std::out_of_range);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_TRUE(theorem_certificate(n).passed) << n;
  }
}

TEST(LeadingCoefficients, DegreeOneValues) {
  const auto fam = build_abcd(1, 1);
  EXPECT_EQ(fam.c[1].coeff(1), Rational(3, 2));
  EXPECT_EQ(fam.d[1].coeff(-1), Rational(3, 2));
  EXPECT_EQ(factor_pair(1).f.leading_coefficient(), Rational(3, 2));
  for (int n = 1; n <= 20; ++n) {
    for (const auto &c : leading_coefficient_checks(n)) {
      EXPECT_TRUE(c.passed) << c.identity << " n=" << n << " " << c.detail;
    }
  }
}

TEST(LeadingCoefficients, BnHasNoInverseTerm) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(build_abcd(n, n).b[static_cast<std::size_t>(n)].coeff(-1), 0);
  }
}

TEST(ContourReduction, MatchesQuadratureOnRandomNumerators) {
  std::mt19937 gen(8);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int n = 1; n <= 8; ++n) {
    const auto pair = factor_pair(n);
    const auto f = cast<double>(pair.f);
    const auto g = cast<double>(pair.g);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> c;
      for (int e = 0; e <= 2 * n - 1; ++e) {
        c.emplace_back(num(gen), den(gen));
      }
      const ExactPoly p = ExactPoly::polynomial(c);
      const auto pd = cast<double>(p);
      const Rational exact = contour_reduce_inside(p, pair.f);
      EXPECT_EQ(exact, p.coeff(2 * n - 1) / pair.f.leading_coefficient());
      const auto numeric = contour_integral_numeric(
          [&](std::complex<double> w) { return evaluate(pd, w) / evaluate(f, w); },
          1e-13);
      ASSERT_TRUE(numeric.converged);
      EXPECT_NEAR(numeric.value.real(), to_double(exact), 1e-10);
      EXPECT_NEAR(numeric.value.imag(), 0.0, 1e-10);

      const auto outside = contour_integral_numeric(
          [&](std::complex<double> w) { return evaluate(pd, w) / evaluate(g, w); },
          1e-13);
      EXPECT_NEAR(std::abs(outside.value), 0.0, 1e-10);
    }
    // 1/(zF) integrates to zero; d/(zG) to d/G(0).
    EXPECT_EQ(contour_reduce_inside(z(-1), pair.f), 0);
    EXPECT_EQ(contour_reduce_outside(z(-1) * Rational(3), pair.g),
              Rational(3) / pair.g.coeff(0));
  }
  EXPECT_THROW(contour_reduce_inside(z(-2), factor_pair(2).f),
               std::invalid_argument);
}

TEST(ContourReduction, HighDegreeNumeratorIsReducedModF) {
  const auto pair = factor_pair(2);
  const ExactPoly p = z(7) + z(3) * Rational(2);
  const auto pd = cast<double>(p);
  const auto f = cast<double>(pair.f);
  const auto numeric = contour_integral_numeric(
      [&](std::complex<double> w) { return evaluate(pd, w) / evaluate(f, w); },
      1e-13);
  EXPECT_NEAR(numeric.value.real(), to_double(contour_reduce_inside(p, pair.f)),
              1e-10);
}

} // namespace
} // namespace legortho
