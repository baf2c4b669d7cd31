#include "latticesum/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <utility>

int main(int argc, char** argv) {
  CLI::App app{"Dipole lattice sums and exciton dispersion for stacked square lattices"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_path;
  const std::pair<const char*, const char*> commands[] = {
      {"sweep-phi", "inter-plane coupling J'/J0 over the in-plane angle phi"},
      {"dispersion", "J, J' and stack energies in eV per wave vector"},
      {"convergence", "direct vs Ewald error and timing for inter-plane D_zz"},
      {"stack", "eigenvalues of an n_planes stack in J0 units"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_path, "CSV output path (overrides output_path)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return latticesum::cli::run(app.get_subcommands().front()->get_name(), config_path, out_path,
                              std::cerr);
}
