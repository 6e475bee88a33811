#include "legortho/run.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "legortho/christoffel.hpp"
#include "legortho/factorization.hpp"
#include "legortho/ledger.hpp"
#include "legortho/partial_fractions.hpp"
#include "legortho/quadrature.hpp"
#include "legortho/sampling.hpp"
#include "legortho/serialization.hpp"

namespace legortho {

namespace {

struct InvalidConfig : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Artifact {
  std::string body;
  bool passed = true;
};

const std::map<std::string, std::function<double(double)>> &targets() {
  static const std::map<std::string, std::function<double(double)>> table{
      {"exp", [](double x) { return std::exp(x); }},
      {"runge", [](double x) { return 1.0 / (1.0 + 25.0 * x * x); }},
      {"abs", [](double x) { return std::abs(x); }},
      {"cos", [](double x) { return std::cos(3.0 * x); }},
  };
  return table;
}

void require(bool condition, const std::string &message) {
  if (!condition) {
    throw InvalidConfig(message);
  }
}

void require_format(const RunConfig &c,
                    std::initializer_list<OutputFormat> allowed) {
  for (auto f : allowed) {
    if (c.format == f) {
      return;
    }
  }
  throw InvalidConfig("output format not supported by this command");
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::string certificate_text(std::span<const Certificate> certs) {
  std::ostringstream os;
  for (const auto &c : certs) {
    os << (c.passed ? "PASS " : "FAIL ") << c.identity << " n=" << c.n;
    if (c.k) {
      os << " k=" << *c.k;
    }
    if (!c.detail.empty()) {
      os << " (" << c.detail << ")";
    }
    os << '\n';
  }
  return os.str();
}

Artifact verify_identities(const RunConfig &c) {
  require(c.n_max >= 1, "--n-max must be >= 1");
  require_format(c, {OutputFormat::json, OutputFormat::text});
  const auto ledger = identity_ledger(c.n_max);
  return {c.format == OutputFormat::json ? to_json_lines(ledger)
                                         : certificate_text(ledger),
          all_passed(ledger)};
}

Artifact verify_theorem(const RunConfig &c) {
  require(c.n >= 0, "--n must be >= 0");
  const auto report = orthogonality_numeric(c.n, c.tol);
  switch (c.format) {
  case OutputFormat::csv:
    return {matrix_to_csv(report.gram), report.passed()};
  case OutputFormat::text: {
    std::ostringstream os;
    os << "n=" << report.n << " points=" << report.points_used
       << " max_deviation=" << format_double(report.max_deviation())
       << " tol=" << format_double(report.tol)
       << (report.passed() ? " PASS" : " FAIL") << '\n';
    return {os.str(), report.passed()};
  }
  case OutputFormat::json:
    break;
  }
  return {dump(to_json(report)), report.passed()};
}

Artifact factor(const RunConfig &c) {
  require(c.n >= 0, "--n must be >= 0");
  require_format(c, {OutputFormat::json, OutputFormat::text});
  const auto pair = factor_pair(c.n);
  std::vector<Certificate> certs{check_fejer_riesz(c.n),
                                 check_fn_closed_form(c.n),
                                 check_coefficient_reversal(c.n)};
  if (c.n >= 1) {
    for (auto &cert : check_fn_gn_alt(c.n)) {
      certs.push_back(cert);
    }
    certs.push_back(check_ode(c.n));
    certs.push_back(hypergeometric_check(c.n));
  }
  const bool passed = all_passed(certs);
  if (c.format == OutputFormat::text) {
    return {certificate_text(certs), passed};
  }
  Json certificates = Json::array();
  for (const auto &cert : certs) {
    certificates.push_back(to_json(cert));
  }
  Json j;
  j["n"] = c.n;
  j["f"] = to_json(pair.f);
  j["g"] = to_json(pair.g);
  j["certificates"] = certificates;
  return {dump(j), passed};
}

Artifact roots(const RunConfig &c) {
  require(c.n >= 1, "--n must be >= 1");
  const auto report = fn_roots(c.n);
  if (c.format == OutputFormat::csv) {
    std::string body = "re,im,modulus,residual\n";
    for (const auto &r : report.roots) {
      body += format_double(r.z.real()) + "," + format_double(r.z.imag()) +
              "," + format_double(r.modulus) + "," +
              format_double(r.residual) + "\n";
    }
    return {body, report.certified()};
  }
  require_format(c, {OutputFormat::json});
  return {dump(to_json(report)), report.certified()};
}

Artifact moments(const RunConfig &c) {
  require(c.n >= 1, "--n must be >= 1");
  require_format(c, {OutputFormat::json});
  const auto values = moments_exact(c.n);
  bool others_zero = true;
  Json all = Json::array();
  for (std::size_t k = 0; k < values.size(); ++k) {
    all.push_back(values[k].str());
    others_zero = others_zero && (k == 0 || values[k] == 0);
  }
  Json j;
  j["n"] = c.n;
  j["k0"] = values[0].str();
  j["others"] = others_zero ? "0" : "nonzero";
  j["moments"] = all;
  return {dump(j), values[0] == 2 && others_zero};
}

Artifact gram(const RunConfig &c) {
  require(c.n >= 0, "--n must be >= 0");
  require(c.count >= 1, "--count must be >= 1");
  const auto batch = sample_arcsine(c.count, c.seed);
  const auto g = empirical_gram(c.n, batch);
  // Every row of the design matrix has squared norm n+1, so trace(G) = n+1.
  const bool trace_ok =
      std::abs(g.trace() - (c.n + 1)) <= 1e-9 * (c.n + 1);
  if (c.format == OutputFormat::csv) {
    return {matrix_to_csv(g), trace_ok};
  }
  require_format(c, {OutputFormat::json});
  Json j;
  j["n"] = c.n;
  j["count"] = c.count;
  j["seed"] = c.seed;
  j["generator_name"] = batch.generator_name;
  j["deviation"] = identity_deviation(g);
  j["trace"] = g.trace();
  j["trace_ok"] = trace_ok;
  j["gram"] = matrix_to_json(g);
  return {dump(j), trace_ok};
}

const std::function<double(double)> &target_function(const RunConfig &c) {
  const auto it = targets().find(c.target);
  require(it != targets().end(), "unknown --target " + c.target);
  return it->second;
}

Artifact sample(const RunConfig &c) {
  require(c.count >= 1, "--count must be >= 1");
  const auto &f = target_function(c);
  const auto batch = sample_arcsine(c.count, c.seed);
  if (c.format == OutputFormat::csv) {
    std::string body = "x,value\n";
    for (double x : batch.points) {
      body += format_double(x) + "," + format_double(f(x)) + "\n";
    }
    return {body, true};
  }
  require_format(c, {OutputFormat::json});
  return {dump(to_json(batch)), true};
}

Artifact fit(const RunConfig &c) {
  require(c.n >= 0, "--n must be >= 0");
  require(c.count >= c.n + 1, "--count must be >= n + 1");
  const auto &f = target_function(c);
  const auto batch = sample_arcsine(c.count, c.seed);
  Eigen::VectorXd values(c.count);
  for (int m = 0; m < c.count; ++m) {
    values[m] = f(batch.points[static_cast<std::size_t>(m)]);
  }
  const auto report = fit_least_squares(c.n, batch, values);
  if (c.format == OutputFormat::csv) {
    std::string body = "x,prediction\n";
    for (double x : batch.points) {
      body += format_double(x) + "," + format_double(predict(report, x)) + "\n";
    }
    return {body, true};
  }
  require_format(c, {OutputFormat::json});
  return {dump(to_json(report)), true};
}

} // namespace

std::optional<Command> parse_command(const std::string &name) {
  static const std::map<std::string, Command> table{
      {"verify-identities", Command::verify_identities},
      {"verify-theorem", Command::verify_theorem},
      {"factor", Command::factor},
      {"roots", Command::roots},
      {"moments", Command::moments},
      {"gram", Command::gram},
      {"sample", Command::sample},
      {"fit", Command::fit},
  };
  const auto it = table.find(name);
  if (it == table.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<OutputFormat> parse_format(const std::string &name) {
  if (name == "json") {
    return OutputFormat::json;
  }
  if (name == "csv") {
    return OutputFormat::csv;
  }
  if (name == "text") {
    return OutputFormat::text;
  }
  return std::nullopt;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  Artifact artifact;
  try {
    if (!(config.tol > 0.0)) {
      throw InvalidConfig("--tol must be > 0");
    }
    switch (config.command) {
    case Command::verify_identities:
      artifact = verify_identities(config);
      break;
    case Command::verify_theorem:
      artifact = verify_theorem(config);
      break;
    case Command::factor:
      artifact = factor(config);
      break;
    case Command::roots:
      artifact = roots(config);
      break;
    case Command::moments:
      artifact = moments(config);
      break;
    case Command::gram:
      artifact = gram(config);
      break;
    case Command::sample:
      artifact = sample(config);
      break;
    case Command::fit:
      artifact = fit(config);
      break;
    }
  } catch (const InvalidConfig &e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_config;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_config;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return exit_check_failed;
  }

  if (config.output_path.empty()) {
    out << artifact.body;
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << config.output_path << '\n';
      return exit_invalid_config;
    }
    file << artifact.body;
  }
  return artifact.passed ? exit_pass : exit_check_failed;
}

} // namespace legortho
