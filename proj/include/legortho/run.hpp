#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace legortho {

enum class Command {
  verify_identities,
  verify_theorem,
  factor,
  roots,
  moments,
  gram,
  sample,
  fit,
};

enum class OutputFormat { json, csv, text };

std::optional<Command> parse_command(const std::string &name);
std::optional<OutputFormat> parse_format(const std::string &name);

struct RunConfig {
  Command command = Command::verify_identities;
  int n = 2;
  int n_max = 25;
  double tol = 1e-10;
  int count = 1000;
  std::uint64_t seed = 0;
  /// Sampled function for `sample` and `fit`: exp, runge, abs or cos.
  std::string target = "exp";
  /// Empty writes to the stream handed to run().
  std::string output_path;
  OutputFormat format = OutputFormat::json;
};

inline constexpr int exit_pass = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_invalid_config = 2;

/**
 * Dispatches one command and writes its artifact once, at the end, to
 * `output_path` or `out`. Returns 0 when every check passed, 1 when a
 * certificate failed and 2 for an invalid configuration (message on `err`).
 */
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace legortho
