#include "legortho/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "legortho/christoffel.hpp"

namespace legortho {

std::uint64_t CounterUniform::bits(std::uint64_t index) const {
  std::uint64_t z = seed_ + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CounterUniform::uniform(std::uint64_t index) const {
  // 53 random bits, centred in their cell so 0 and 1 never occur.
  return (static_cast<double>(bits(index) >> 11) + 0.5) * 0x1.0p-53;
}

double arcsine_transform(double u) { return std::cos(std::numbers::pi * u); }

SampleBatch sample_arcsine(int count, std::uint64_t seed) {
  if (count < 1) {
    throw std::invalid_argument("sample_arcsine: count must be >= 1");
  }
  const CounterUniform rng(seed);
  SampleBatch batch;
  batch.seed = seed;
  batch.generator_name = CounterUniform::name;
  batch.points.resize(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) {
    batch.points[static_cast<std::size_t>(m)] =
        arcsine_transform(rng.uniform(static_cast<std::uint64_t>(m)));
  }
  return batch;
}

Eigen::MatrixXd design_matrix(int n, const SampleBatch &batch) {
  if (n < 0) {
    throw std::invalid_argument("design_matrix: negative degree");
  }
  const auto rows = static_cast<Eigen::Index>(batch.points.size());
  Eigen::MatrixXd d(rows, n + 1);
  for (Eigen::Index m = 0; m < rows; ++m) {
    d.row(m) = q_basis_row(n, batch.points[static_cast<std::size_t>(m)])
                   .transpose();
  }
  return d;
}

Eigen::MatrixXd empirical_gram(int n, const SampleBatch &batch) {
  if (batch.points.empty()) {
    throw std::invalid_argument("empirical_gram: empty batch");
  }
  const Eigen::MatrixXd d = design_matrix(n, batch);
  Eigen::MatrixXd g(n + 1, n + 1);
  g.setZero();
  g.selfadjointView<Eigen::Lower>().rankUpdate(d.transpose());
  g = g.selfadjointView<Eigen::Lower>();
  return g / static_cast<double>(batch.points.size());
}

double identity_deviation(const Eigen::MatrixXd &gram) {
  const Eigen::MatrixXd diff =
      gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      diff, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

FitReport fit_least_squares(int n, const SampleBatch &batch,
                            const Eigen::VectorXd &values) {
  const auto count = static_cast<Eigen::Index>(batch.points.size());
  if (values.size() != count) {
    throw std::invalid_argument("fit_least_squares: values length mismatch");
  }
  if (count < n + 1) {
    throw std::runtime_error(
        "fit_least_squares: rank deficient, fewer samples than basis size");
  }
  const Eigen::MatrixXd d = design_matrix(n, batch);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(d);
  if (qr.rank() < n + 1) {
    throw std::runtime_error("fit_least_squares: rank deficient design");
  }

  FitReport report;
  report.n = n;
  report.coefficients = qr.solve(values);
  report.residual_rms =
      (d * report.coefficients - values).norm() / std::sqrt(double(count));
  const Eigen::MatrixXd scaled = d / std::sqrt(double(count));
  const Eigen::MatrixXd gram = scaled.transpose() * scaled;
  report.gram_deviation = identity_deviation(gram);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled);
  const auto &s = svd.singularValues();
  report.condition_estimate = s(0) / s(s.size() - 1);
  report.sample_count = static_cast<int>(count);
  report.seed = batch.seed;
  return report;
}

double predict(const FitReport &report, double x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw std::domain_error("predict: x outside [-1, 1]");
  }
  return q_basis_row(report.n, x).dot(report.coefficients);
}

} // namespace legortho
