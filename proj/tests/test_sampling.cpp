#include <cmath>
#include <cstring>
#include <numbers>

#include <gtest/gtest.h>

#include "legortho/christoffel.hpp"
#include "legortho/sampling.hpp"

namespace legortho {
namespace {

TEST(CounterUniform, OpenUnitIntervalAndDeterministic) {
  const CounterUniform a(42), b(42), c(43);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const double u = a.uniform(i);
    EXPECT_GT(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_EQ(a.bits(i), b.bits(i));
  }
  EXPECT_NE(a.bits(0), c.bits(0));
  EXPECT_NE(a.bits(0), a.bits(1));
  EXPECT_STREQ(CounterUniform::name, "splitmix64-counter");
}

TEST(CounterUniform, MatchesReferenceSplitMix) {
  // Sequential SplitMix64 seeded with 0 produces this first output.
  EXPECT_EQ(CounterUniform(0).bits(0), 0xe220a8397b1dcdafULL);
}

TEST(Arcsine, Transform) {
  EXPECT_NEAR(arcsine_transform(0.5), 0.0, 1e-16);
  EXPECT_NEAR(arcsine_transform(1e-12), 1.0, 1e-15);
  EXPECT_NEAR(arcsine_transform(1.0 - 1e-12), -1.0, 1e-15);
  EXPECT_NEAR(arcsine_transform(1.0 / 3.0), 0.5, 1e-15);
}

TEST(Arcsine, MomentsMatchDensity) {
  const auto batch = sample_arcsine(100000, 11);
  ASSERT_EQ(batch.points.size(), 100000u);
  EXPECT_EQ(batch.generator_name, "splitmix64-counter");
  double mean = 0.0, second = 0.0;
  for (double x : batch.points) {
    EXPECT_GE(x, -1.0);
    EXPECT_LE(x, 1.0);
    mean += x;
    second += x * x;
  }
  mean /= 1e5;
  second /= 1e5;
  // E x = 0, E x^2 = 1/2, Var x^2 = 1/8.
  const double se = std::sqrt(0.5) / std::sqrt(1e5);
  EXPECT_LT(std::abs(mean), 4 * se);
  EXPECT_LT(std::abs(second - 0.5), 4 * std::sqrt(0.125) / std::sqrt(1e5));
}

TEST(DesignMatrix, Structure) {
  const auto batch = sample_arcsine(50, 3);
  const auto d0 = design_matrix(0, batch);
  EXPECT_TRUE(d0.isOnes());
  for (int n : {1, 4, 17}) {
    const auto d = design_matrix(n, batch);
    ASSERT_EQ(d.rows(), 50);
    ASSERT_EQ(d.cols(), n + 1);
    for (int m = 0; m < 50; ++m) {
      EXPECT_NEAR(d.row(m).squaredNorm(), n + 1.0, 1e-10 * (n + 1));
      EXPECT_NEAR(d(m, n), q_basis_eval(n, n, batch.points[static_cast<std::size_t>(m)]),
                  1e-13);
    }
  }
  SampleBatch zero{{0.0}, 0, "manual"};
  const auto d1 = design_matrix(1, zero);
  EXPECT_NEAR(d1(0, 0), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(d1(0, 1), 0.0, 1e-15);
}

TEST(EmpiricalGram, TraceAndDegreeZero) {
  const auto batch = sample_arcsine(300, 5);
  EXPECT_NEAR(empirical_gram(0, batch)(0, 0), 1.0, 1e-14);
  for (int n : {1, 6, 20}) {
    const auto g = empirical_gram(n, batch);
    EXPECT_NEAR(g.trace(), n + 1.0, 1e-10 * (n + 1));
    EXPECT_TRUE(g.isApprox(g.transpose()));
  }
  EXPECT_NEAR(identity_deviation(Eigen::MatrixXd::Identity(4, 4)), 0.0, 1e-15);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2, 2);
  m(0, 1) = m(1, 0) = 0.25;
  EXPECT_NEAR(identity_deviation(m), 0.25, 1e-15);
}

TEST(EmpiricalGram, ExpectationIsIdentity) {
  constexpr int n = 5, count = 500, seeds = 200;
  Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(n + 1, n + 1);
  Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int s = 0; s < seeds; ++s) {
    const auto g = empirical_gram(n, sample_arcsine(count, 1000 + s));
    mean += g;
    sq += g.cwiseProduct(g);
  }
  mean /= seeds;
  sq /= seeds;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double var = std::max(sq(i, j) - mean(i, j) * mean(i, j), 1e-30);
      const double se = std::sqrt(var / seeds);
      EXPECT_LT(std::abs(mean(i, j) - (i == j ? 1.0 : 0.0)), 5 * se + 1e-12)
          << i << "," << j;
    }
  }
}

TEST(Fit, RecoversFunctionsInSpan) {
  const auto batch = sample_arcsine(400, 9);
  for (int n : {3, 8}) {
    Eigen::VectorXd truth = Eigen::VectorXd::LinSpaced(n + 1, 1.0, n + 1.0);
    Eigen::VectorXd values(400);
    for (int m = 0; m < 400; ++m) {
      values[m] = q_basis_row(n, batch.points[static_cast<std::size_t>(m)]).dot(truth);
    }
    const auto report = fit_least_squares(n, batch, values);
    EXPECT_LT((report.coefficients - truth).lpNorm<Eigen::Infinity>(), 1e-10);
    EXPECT_LT(report.residual_rms, 1e-10);
    EXPECT_GE(report.condition_estimate, 1.0);
    EXPECT_EQ(report.sample_count, 400);
    EXPECT_EQ(report.seed, 9u);
  }
  Eigen::VectorXd e2(400);
  for (int m = 0; m < 400; ++m) {
    e2[m] = q_basis_eval(4, 2, batch.points[static_cast<std::size_t>(m)]);
  }
  const auto report = fit_least_squares(4, batch, e2);
  Eigen::VectorXd expected = Eigen::VectorXd::Zero(5);
  expected[2] = 1.0;
  EXPECT_LT((report.coefficients - expected).lpNorm<Eigen::Infinity>(), 1e-10);
}

TEST(Fit, MatchesNormalEquationsOracle) {
  const auto batch = sample_arcsine(1000, 7);
  Eigen::VectorXd values(1000);
  for (int m = 0; m < 1000; ++m) {
    values[m] = std::exp(batch.points[static_cast<std::size_t>(m)]);
  }
  for (int n : {2, 6, 10}) {
    const auto report = fit_least_squares(n, batch, values);
    const Eigen::MatrixXd d = design_matrix(n, batch);
    const Eigen::VectorXd oracle =
        (d.transpose() * d).ldlt().solve(d.transpose() * values);
    EXPECT_LT((report.coefficients - oracle).lpNorm<Eigen::Infinity>(), 1e-9) << n;
    const double rms = std::sqrt((d * oracle - values).squaredNorm() / 1000);
    EXPECT_NEAR(report.residual_rms, rms, 1e-12) << n;
    EXPECT_LT(report.gram_deviation, 1.0);
  }
}

TEST(Fit, PredictRoundTrip) {
  // p(x) / sqrt(K_5(x)) lies in the span of Q_0..Q_5 for any quintic p.
  const ChristoffelEvaluator k5(5);
  const auto target = [&](double x) {
    return (x * x * x - 0.5 * x) / std::sqrt(k5(x));
  };
  const auto batch = sample_arcsine(200, 1);
  Eigen::VectorXd values(200);
  for (int m = 0; m < 200; ++m) {
    values[m] = target(batch.points[static_cast<std::size_t>(m)]);
  }
  const auto report = fit_least_squares(5, batch, values);
  for (double x : {-1.0, -0.3, 0.0, 0.77, 1.0}) {
    EXPECT_NEAR(predict(report, x), target(x), 1e-9);
  }
  FitReport zero;
  zero.n = 2;
  zero.coefficients = Eigen::VectorXd::Zero(3);
  EXPECT_EQ(predict(zero, 0.4), 0.0);
  FitReport first = zero;
  first.coefficients[0] = 1.0;
  EXPECT_NEAR(predict(first, 0.4), q_basis_eval(2, 0, 0.4), 1e-15);
  EXPECT_THROW(predict(report, 1.5), std::domain_error);
}

TEST(Fit, Errors) {
  const auto batch = sample_arcsine(5, 2);
  EXPECT_THROW(fit_least_squares(6, batch, Eigen::VectorXd::Zero(5)),
               std::runtime_error);
  EXPECT_THROW(fit_least_squares(2, batch, Eigen::VectorXd::Zero(4)),
               std::invalid_argument);
  SampleBatch repeated{std::vector<double>(10, 0.3), 0, "manual"};
  EXPECT_THROW(fit_least_squares(3, repeated, Eigen::VectorXd::Ones(10)),
               std::runtime_error);
}

TEST(Sampling, BitwiseDeterministic) {
  const auto a = sample_arcsine(1000, 123);
  const auto b = sample_arcsine(1000, 123);
  EXPECT_EQ(std::memcmp(a.points.data(), b.points.data(), 1000 * sizeof(double)), 0);
  const auto g1 = empirical_gram(7, a);
  const auto g2 = empirical_gram(7, b);
  EXPECT_EQ(std::memcmp(g1.data(), g2.data(), sizeof(double) * 64), 0);
  // A prefix of a longer batch is the shorter batch.
  const auto c = sample_arcsine(10, 123);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(c.points[static_cast<std::size_t>(i)], a.points[static_cast<std::size_t>(i)]);
  }
}

} // namespace
} // namespace legortho
