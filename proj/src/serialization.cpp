#include "legortho/serialization.hpp"

#include <charconv>
#include <sstream>

namespace legortho {

std::string format_double(double value) {
  if (value == 0.0) {
    value = 0.0;
  }
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

Json to_json(const Certificate &c) {
  Json j;
  j["identity"] = c.identity;
  j["n"] = c.n;
  j["k"] = c.k ? Json(*c.k) : Json(nullptr);
  j["status"] = c.passed ? "pass" : "fail";
  j["residual_terms"] = c.residual_terms;
  j["detail"] = c.detail;
  return j;
}

Json to_json(const ExactPoly &p) {
  Json j = Json::object();
  for (int e = p.min_exponent(); e <= p.degree(); ++e) {
    const Rational c = p.coeff(e);
    if (c != 0) {
      j[std::to_string(e)] = c.str();
    }
  }
  return j;
}

Json to_json(const RootReport &report) {
  Json roots = Json::array();
  for (const auto &r : report.roots) {
    roots.push_back({{"re", r.z.real()},
                     {"im", r.z.imag()},
                     {"modulus", r.modulus},
                     {"residual", r.residual}});
  }
  Json j;
  j["n"] = report.n;
  j["roots"] = roots;
  j["max_modulus"] = report.max_modulus;
  j["min_separation"] = report.min_separation;
  j["certified"] = report.certified();
  return j;
}

Json to_json(const SupportReport &report) {
  Json entries = Json::array();
  for (const auto &e : report.entries) {
    entries.push_back({{"family", std::string(1, e.family)},
                       {"k", e.k},
                       {"min_exponent", e.min_exponent},
                       {"max_exponent", e.max_exponent},
                       {"within_displayed_bounds", e.within_displayed_bounds}});
  }
  return {{"n", report.n},
          {"entries", entries},
          {"certificate", to_json(report.certificate)}};
}

Json matrix_to_json(const Eigen::MatrixXd &m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back(m(i, k));
    }
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const OrthoReport &report) {
  Json unconverged = Json::array();
  for (const auto &[i, j] : report.unconverged) {
    unconverged.push_back({i, j});
  }
  Json j;
  j["n"] = report.n;
  j["tol"] = report.tol;
  j["points_used"] = report.points_used;
  j["max_offdiag"] = report.max_offdiag;
  j["max_diag_dev"] = report.max_diag_dev;
  j["max_deviation"] = report.max_deviation();
  j["converged"] = report.converged();
  j["passed"] = report.passed();
  j["unconverged"] = unconverged;
  j["refinement_deltas"] = report.refinement_deltas;
  j["gram"] = matrix_to_json(report.gram);
  return j;
}

Json to_json(const SampleBatch &batch) {
  return {{"seed", batch.seed},
          {"generator_name", batch.generator_name},
          {"count", batch.points.size()},
          {"points", batch.points}};
}

Json to_json(const FitReport &report) {
  std::vector<double> coefficients(report.coefficients.data(),
                                   report.coefficients.data() +
                                       report.coefficients.size());
  return {{"n", report.n},
          {"coefficients", coefficients},
          {"residual_rms", report.residual_rms},
          {"gram_deviation", report.gram_deviation},
          {"condition_estimate", report.condition_estimate},
          {"sample_count", report.sample_count},
          {"seed", report.seed}};
}

std::string to_json_lines(std::span<const Certificate> certificates) {
  std::string out;
  for (const auto &c : certificates) {
    out += to_json(c).dump();
    out += '\n';
  }
  return out;
}

std::string matrix_to_csv(const Eigen::MatrixXd &m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      os << (k ? "," : "") << format_double(m(i, k));
    }
    os << '\n';
  }
  return os.str();
}

} // namespace legortho
