#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "gcpres/cli.hpp"

int main(int argc, char** argv) {
  using gcpres::cli::Subcommand;
  CLI::App app{"Resultants and perturbed resultants of parametric homogeneous systems"};
  app.require_subcommand(1);

  gcpres::cli::CommandSpec spec;
  std::string perturbation;
  const std::map<std::string, Subcommand> names{{"res", Subcommand::Res},       {"gcp", Subcommand::Gcp},
                                                {"pres", Subcommand::Pres},     {"planar", Subcommand::Planar},
                                                {"check", Subcommand::Check}};
  const std::map<Subcommand, std::string> help{
      {Subcommand::Res, "classical resultant with respect to the x-block"},
      {Subcommand::Gcp, "generalized characteristic polynomial for one perturbation"},
      {Subcommand::Pres, "perturbed resultant over seeded random perturbations"},
      {Subcommand::Planar, "zero set of the perturbed resultant for n = 2, m = 1"},
      {Subcommand::Check, "parse and validate only"}};

  for (const auto& [name, cmd] : names) {
    CLI::App* sub = app.add_subcommand(name, help.at(cmd));
    sub->add_option("input", spec.input, "system file")->required();
    sub->add_flag("--json", spec.json, "structured output");
    sub->add_flag("--factored", spec.factored, "print univariate results as a squarefree decomposition");
    if (cmd == Subcommand::Gcp || cmd == Subcommand::Pres || cmd == Subcommand::Planar) {
      sub->add_option("--seed", spec.seed, "random seed, 0 for entropy")->capture_default_str();
      sub->add_option("--coeff-bound", spec.coefficient_bound, "bound on perturbation coefficients")
          ->check(CLI::Range(1L, 1000000L))
          ->capture_default_str();
    }
    if (cmd == Subcommand::Pres || cmd == Subcommand::Planar)
      sub->add_option("--trials", spec.trials, "number of perturbations before confirmation")
          ->check(CLI::Range(std::size_t{2}, std::size_t{1000}))
          ->capture_default_str();
    if (cmd == Subcommand::Gcp) sub->add_option("--perturbation", perturbation, "forms \"p1; p2; ...\"");
    if (cmd == Subcommand::Planar) sub->add_flag("--compare", spec.compare, "also run pres and compare zero sets");
    sub->callback([&spec, cmd] { spec.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gcpres::cli::kExitValidation;
  }
  if (!perturbation.empty()) spec.perturbation = perturbation;
  return gcpres::cli::run(spec, std::cout, std::cerr);
}
