// Command-line front end: exact identity ledger, numeric orthogonality
// checks, F_n factors and roots, and the arcsine-sampling regression.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "legortho/run.hpp"

int main(int argc, char **argv) {
  using legortho::Command;

  CLI::App app{"Legendre orthogonality under the Christoffel-weighted "
               "arcsine measure"};
  app.require_subcommand(1);

  legortho::RunConfig config;
  std::string format = "json";

  const auto add_common = [&](CLI::App *sub) {
    sub->add_option("--output", config.output_path,
                    "Write the artifact here instead of stdout");
    sub->add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  const auto add_n = [&](CLI::App *sub) {
    sub->add_option("--n", config.n, "Degree n")->check(CLI::NonNegativeNumber);
  };
  const auto add_sampling = [&](CLI::App *sub) {
    sub->add_option("--count", config.count, "Number of samples")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "Generator seed");
  };

  auto *identities = app.add_subcommand(
      "verify-identities", "Exact certificate ledger for 1 <= n <= n-max");
  identities->add_option("--n-max", config.n_max, "Largest degree")
      ->check(CLI::PositiveNumber);
  add_common(identities);

  auto *theorem = app.add_subcommand(
      "verify-theorem", "Gram matrix by the periodic trapezoid rule");
  add_n(theorem);
  theorem->add_option("--tol", config.tol, "Entrywise tolerance")
      ->check(CLI::PositiveNumber);
  add_common(theorem);

  auto *factor =
      app.add_subcommand("factor", "F_n, G_n and their exact certificates");
  add_n(factor);
  add_common(factor);

  auto *roots = app.add_subcommand("roots", "Certified zeros of F_n");
  add_n(roots);
  add_common(roots);

  auto *moments =
      app.add_subcommand("moments", "Exact contour moments for k = 0..2n");
  add_n(moments);
  add_common(moments);

  auto *gram = app.add_subcommand("gram", "Empirical Gram matrix of Q_j");
  add_n(gram);
  add_sampling(gram);
  add_common(gram);

  auto *sample = app.add_subcommand("sample", "Arcsine-distributed samples");
  add_sampling(sample);
  sample->add_option("--target", config.target, "exp, runge, abs or cos");
  add_common(sample);

  auto *fit = app.add_subcommand("fit", "Least squares in the Q basis");
  add_n(fit);
  add_sampling(fit);
  fit->add_option("--target", config.target, "exp, runge, abs or cos");
  add_common(fit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return legortho::exit_invalid_config;
  }

  const auto *chosen = app.get_subcommands().front();
  config.command = *legortho::parse_command(chosen->get_name());
  config.format = *legortho::parse_format(format);
  return legortho::run(config, std::cout, std::cerr);
}
