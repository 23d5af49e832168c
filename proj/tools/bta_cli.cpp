#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "bta/cli.hpp"
#include "bta/errors.hpp"
#include "bta/version.hpp"

namespace {

void add_shape_options(CLI::App* cmd, bta::RunConfig& config) {
  cmd->add_option("--n", config.n, "block order (>= 2)");
  cmd->add_option("--sigma", config.sigma, "rows of the corner block");
  cmd->add_option("--tau", config.tau, "columns of the corner block");
  cmd->add_flag("--relaxed", config.relaxed,
                "allow |sigma - tau| > 1 (outside the classified hypotheses)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification toolkit for commutative algebras of "
               "block Toeplitz matrices over a Schur algebra"};
  app.set_version_flag("--version", std::string("bta ") + bta::kVersion);
  app.require_subcommand(1);

  bta::RunConfig config;
  std::string target;
  std::string input_path;
  std::string output_path;
  std::string mu = "2";
  std::string lambda = "1";
  std::string a = "1", b = "0", c = "0", d = "1";
  int which = 0;
  bta::ExampleOptions example_options;

  CLI::App* verify = app.add_subcommand(
      "verify", "run a seeded randomized property suite");
  verify
      ->add_option("target", target,
                   "lemma-product | fab-closure | special-algebra | maximality "
                   "| pair-equivalence | structured-product")
      ->required();
  add_shape_options(verify, config);
  verify->add_option("--trials", config.trials, "number of seeded trials");
  verify->add_option("--seed", config.seed, "64-bit seed");
  verify->add_option("--format", config.format, "text | json");

  CLI::App* classify = app.add_subcommand(
      "classify", "classify an algebra of block Toeplitz matrices");
  classify->add_option("--input", input_path, "algebra JSON file")->required();
  classify->add_option("--output", output_path, "write the result here");
  classify->add_option("--format", config.format, "text | json");
  classify->add_flag("--relaxed", config.relaxed,
                     "allow |sigma - tau| > 1 when parsing");

  CLI::App* example = app.add_subcommand(
      "example", "emit a bundled worked example as an algebra fixture");
  example->add_option("which", which, "1, 2, or 3")->required();
  example->add_option("--mu", mu, "coupling scalar of example 2 (rational, nonzero)");
  example->add_option("--lambda", lambda, "diagonal scalar of example 3's lead element");
  example->add_option("--a", a, "example 3 corner entry");
  example->add_option("--b", b, "example 3 corner entry");
  example->add_option("--c", c, "example 3 corner entry");
  example->add_option("--d", d, "example 3 corner entry");
  example->add_option("--variant", example_options.variant,
                      "example 1 only: displayed | defined | both");
  example->add_option("--output", output_path, "write the fixture here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bta::kExitBadInput;
  }

  std::optional<std::string> out_path;
  if (!output_path.empty()) out_path = output_path;

  if (verify->parsed()) {
    return bta::cmd_verify(target, config, std::cout, std::cerr);
  }
  if (classify->parsed()) {
    if (classify->count("--format") == 0) config.format = "json";
    return bta::cmd_classify(input_path, out_path, config, std::cout, std::cerr);
  }
  try {
    example_options.params.mu = bta::parse_rational(mu);
    example_options.params.lambda = bta::parse_rational(lambda);
    example_options.params.a = bta::parse_rational(a);
    example_options.params.b = bta::parse_rational(b);
    example_options.params.c = bta::parse_rational(c);
    example_options.params.d = bta::parse_rational(d);
  } catch (const bta::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bta::kExitBadInput;
  }
  example_options.output_path = out_path;
  return bta::cmd_example(which, example_options, std::cout, std::cerr);
}
