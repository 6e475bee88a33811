#pragma once

#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "legortho/certificate.hpp"
#include "legortho/factorization.hpp"
#include "legortho/partial_fractions.hpp"
#include "legortho/quadrature.hpp"
#include "legortho/sampling.hpp"

namespace legortho {

using Json = nlohmann::ordered_json;

/// {"identity", "n", "k", "status", "residual_terms", "detail"}; k may be null.
Json to_json(const Certificate &c);

/// Exact coefficients as strings, keyed by exponent.
Json to_json(const ExactPoly &p);

Json to_json(const RootReport &report);
Json to_json(const SupportReport &report);
Json to_json(const OrthoReport &report);
Json to_json(const SampleBatch &batch);
Json to_json(const FitReport &report);
Json matrix_to_json(const Eigen::MatrixXd &m);

/// One compact JSON object per line.
std::string to_json_lines(std::span<const Certificate> certificates);

/// Comma separated rows, full round-trip precision, no header.
std::string matrix_to_csv(const Eigen::MatrixXd &m);

/// Shortest decimal that parses back to exactly `value`.
std::string format_double(double value);

} // namespace legortho
