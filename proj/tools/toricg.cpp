// toricg: toric h- and g-polynomials of polytopes, and checks built on them.

#include "toricg/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace cli = toricg::cli;

int main(int argc, char** argv) {
  CLI::App app{"Toric h- and g-polynomials of convex polytopes"};
  app.require_subcommand(1);
  cli::Options opt;
  std::string input, suite;
  std::vector<std::string> scope;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", opt.json, "Emit JSON instead of a table"); };
  const char* input_help = "Catalog expression (e.g. prism(simplex2)) or a polytope/v1 or lattice/v1 JSON file";

  auto* gh = app.add_subcommand("gh", "h, g and flag vector of a polytope");
  gh->add_option("input", input, input_help)->required();
  add_json(gh);

  auto* flags = app.add_subcommand("flags", "Flag vector of a polytope");
  flags->add_option("input", input, input_help)->required();
  add_json(flags);

  auto* verify = app.add_subcommand("verify", "Run a check suite over polytopes or the catalog");
  verify->add_option("suite", suite, "One of: " + cli::join(cli::suite_names()))->required();
  verify->add_option("inputs", scope, "Polytopes to check");
  verify->add_flag("--all", opt.all, "Check the whole built-in catalog");
  verify->add_option("--faces", opt.faces, "Faces to check for monotonicity: all | dim=k");
  add_json(verify);

  auto* shell = app.add_subcommand("shell", "Line shelling and local h-polynomials");
  shell->add_option("input", input, input_help)->required();
  shell->add_option("--direction", opt.direction, "Line direction \"a,b,c\" (rationals)");
  shell->add_option("--seed", opt.seed, "Seed for random directions");
  add_json(shell);

  auto* rigidity = app.add_subcommand("rigidity", "Stress space of the triangulated edge framework");
  rigidity->add_option("input", input, input_help)->required();
  add_json(rigidity);

  auto* localize = app.add_subcommand("localize", "Front/back decomposition of the cone over a polytope");
  localize->add_option("input", input, "cone(X) or X, where X is as for the other commands")->required();
  localize->add_option("--v", opt.v, "Direction \"a,b,c\" in the cone's space; sampled when omitted");
  localize->add_option("--seed", opt.seed, "Seed for sampled directions");
  add_json(localize);

  auto* verma = app.add_subcommand("verma", "Verma multiplicities of the cone over a polytope");
  verma->add_option("input", input, input_help)->required();
  verma->add_option("--faces", opt.faces, "Faces to report: all | dim=k");
  add_json(verma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  try {
    if (*gh) return cli::cmd_gh(input, opt, std::cout);
    if (*flags) return cli::cmd_flags(input, opt, std::cout);
    if (*verify) return cli::cmd_verify(suite, scope, opt, std::cout);
    if (*shell) return cli::cmd_shell(input, opt, std::cout);
    if (*rigidity) return cli::cmd_rigidity(input, opt, std::cout);
    if (*localize) return cli::cmd_localize(input, opt, std::cout);
    if (*verma) return cli::cmd_verma(input, opt, std::cout);
  } catch (const toricg::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return cli::kCheckFailed;
  }
  return cli::kInputError;
}
