#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace legortho {

/// Counter-based SplitMix64: draw m is mix(seed + (m+1) * golden_gamma).
class CounterUniform {
public:
  static constexpr const char *name = "splitmix64-counter";

  explicit CounterUniform(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t index) const;
  /// Uniform on the open interval (0, 1).
  double uniform(std::uint64_t index) const;

private:
  std::uint64_t seed_;
};

/// Points distributed with the arcsine density 1 / (pi sqrt(1 - x^2)).
struct SampleBatch {
  std::vector<double> points;
  std::uint64_t seed = 0;
  std::string generator_name;
};

/// cos(pi u): maps uniform (0, 1) draws to the arcsine law.
double arcsine_transform(double u);

/// x_m = cos(pi U_m), U_m uniform on (0, 1) from CounterUniform(seed).
SampleBatch sample_arcsine(int count, std::uint64_t seed);

/// Entry (m, j) = Q_j(x_m).
Eigen::MatrixXd design_matrix(int n, const SampleBatch &batch);

/// (1/M) D^T D for the design matrix D; its expectation is the identity.
Eigen::MatrixXd empirical_gram(int n, const SampleBatch &batch);

/// Spectral norm of a symmetric matrix minus the identity.
double identity_deviation(const Eigen::MatrixXd &gram);

struct FitReport {
  int n = 0;
  /// Coefficients in the Q basis.
  Eigen::VectorXd coefficients;
  double residual_rms = 0.0;
  /// || G - I ||_2 for the empirical Gram matrix.
  double gram_deviation = 0.0;
  /// Ratio of extreme singular values of D / sqrt(M).
  double condition_estimate = 0.0;
  int sample_count = 0;
  std::uint64_t seed = 0;
};

/**
 * Unweighted least squares in the Q basis, solved by column-pivoted
 * Householder QR. Equivalent to polynomial regression with weight
 * 1 / ((n+1) K_n). Throws std::invalid_argument when values and samples
 * disagree in length and std::runtime_error when fewer than n+1 samples are
 * given or the design matrix is numerically rank deficient.
 */
FitReport fit_least_squares(int n, const SampleBatch &batch,
                            const Eigen::VectorXd &values);

/// sum_j c_j Q_j(x); x must lie in [-1, 1].
double predict(const FitReport &report, double x);

} // namespace legortho
