#include "legortho/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "legortho/christoffel.hpp"
#include "legortho/factorization.hpp"
#include "legortho/legendre.hpp"

namespace legortho {

namespace {

void validate(const QuadratureOptions &options) {
  if (options.base_points < 1 || options.max_points < options.base_points) {
    throw std::invalid_argument("QuadratureOptions: bad point counts");
  }
}

// Adds P_i^* P_j^* / K_n at x to the upper triangle of `sums`.
void accumulate_integrand(int n, double x, Eigen::MatrixXd &sums) {
  const auto p = legendre_values(n, x);
  Eigen::VectorXd star(n + 1);
  double kn = 0.0;
  for (int k = 0; k <= n; ++k) {
    star[k] = legendre_normalization(k) * p[static_cast<std::size_t>(k)];
    kn += star[k] * star[k];
  }
  kn /= n + 1;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= j; ++i) {
      sums(i, j) += star[i] * star[j] / kn;
    }
  }
}

} // namespace

OrthoReport orthogonality_numeric(int n, double tol,
                                  QuadratureOptions options) {
  if (n < 0) {
    throw std::invalid_argument("orthogonality_numeric: negative degree");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("orthogonality_numeric: tol must be > 0");
  }
  validate(options);
  const int size = n + 1;
  OrthoReport report;
  report.n = n;
  report.tol = tol;

  Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(size, size);
  int points = options.base_points;
  for (int m = 0; m < points; ++m) {
    accumulate_integrand(n, std::cos(2.0 * std::numbers::pi * m / points),
                         sums);
  }
  Eigen::MatrixXd current = sums / points;
  std::vector<std::vector<bool>> done(
      static_cast<std::size_t>(size),
      std::vector<bool>(static_cast<std::size_t>(size), false));

  while (true) {
    if (2 * points > options.max_points) {
      break;
    }
    // New nodes are the midpoints of the current grid.
    for (int m = 0; m < points; ++m) {
      accumulate_integrand(
          n, std::cos(2.0 * std::numbers::pi * (m + 0.5) / points), sums);
    }
    points *= 2;
    const Eigen::MatrixXd next = sums / points;
    double largest = 0.0;
    bool all_done = true;
    for (int j = 0; j < size; ++j) {
      for (int i = 0; i <= j; ++i) {
        const double delta = std::abs(next(i, j) - current(i, j));
        largest = std::max(largest, delta);
        done[i][j] = delta < tol / 10.0;
        all_done = all_done && done[i][j];
      }
    }
    report.refinement_deltas.push_back(largest);
    current = next;
    if (all_done) {
      break;
    }
  }

  for (int j = 0; j < size; ++j) {
    for (int i = 0; i <= j; ++i) {
      if (!done[i][j]) {
        report.unconverged.emplace_back(i, j);
      }
    }
  }
  report.gram = current.triangularView<Eigen::Upper>();
  report.gram.triangularView<Eigen::StrictlyLower>() =
      current.transpose().triangularView<Eigen::StrictlyLower>();
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < size; ++i) {
      if (i == j) {
        report.max_diag_dev =
            std::max(report.max_diag_dev, std::abs(report.gram(i, i) - 1.0));
      } else {
        report.max_offdiag =
            std::max(report.max_offdiag, std::abs(report.gram(i, j)));
      }
    }
  }
  report.points_used = points;
  return report;
}

ContourResult contour_integral_numeric(
    const std::function<std::complex<double>(std::complex<double>)> &f,
    double tol, QuadratureOptions options) {
  validate(options);
  using Complex = std::complex<double>;
  int points = options.base_points;
  Complex sum(0.0);
  for (int m = 0; m < points; ++m) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * m / points);
    sum += f(z) * z;
  }
  ContourResult result{sum / static_cast<double>(points), points, false};
  while (2 * points <= options.max_points) {
    for (int m = 0; m < points; ++m) {
      const Complex z =
          std::polar(1.0, 2.0 * std::numbers::pi * (m + 0.5) / points);
      sum += f(z) * z;
    }
    points *= 2;
    const Complex next = sum / static_cast<double>(points);
    const double delta = std::abs(next - result.value);
    result = {next, points, delta < tol};
    if (result.converged) {
      break;
    }
  }
  return result;
}

std::complex<double> contour_moment_numeric(int n, int k, double tol,
                                            QuadratureOptions options) {
  if (n < 1 || k < 0 || k > 2 * n) {
    throw std::out_of_range("contour_moment_numeric: need n >= 1, 0 <= k <= 2n");
  }
  const auto pair = factor_pair(n);
  const auto f = cast<double>(pair.f);
  const auto g = cast<double>(pair.g);
  const double scale = 2.0 * (n + 1);
  const auto integrand = [&](std::complex<double> z) {
    const double x = z.real();
    const double pk = legendre_eval(k, x).value;
    return scale * std::pow(z, 2 * n - 1) * pk /
           (evaluate(f, z) * evaluate(g, z));
  };
  const ContourResult result = contour_integral_numeric(integrand, tol, options);
  if (!result.converged) {
    throw std::runtime_error("contour_moment_numeric: no convergence");
  }
  return result.value;
}

double interval_form_numeric(int n, int i, int j, double tol,
                             QuadratureOptions options) {
  if (i < 0 || j < 0 || i > n || j > n) {
    throw std::out_of_range("interval_form_numeric: index outside 0..n");
  }
  validate(options);
  const ChristoffelEvaluator kn(n, ChristoffelMode::sum);
  const double norm = legendre_normalization(i) * legendre_normalization(j);
  const auto rule = [&](int points) {
    double acc = 0.0;
    for (int m = 0; m < points; ++m) {
      const double x = std::cos((m + 0.5) * std::numbers::pi / points);
      acc += legendre_eval(i, x).value * legendre_eval(j, x).value / kn(x);
    }
    return norm * acc / points;
  };
  int points = options.base_points;
  double value = rule(points);
  while (2 * points <= options.max_points) {
    points *= 2;
    const double next = rule(points);
    const bool done = std::abs(next - value) < tol;
    value = next;
    if (done) {
      return value;
    }
  }
  throw std::runtime_error("interval_form_numeric: no convergence");
}

} // namespace legortho
