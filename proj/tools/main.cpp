// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "lsd/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Lewenstein-Sanpera decompositions of bipartite and multipartite states"};
  app.require_subcommand(1, 1);

  lsd::RunConfig cfg;
  double tol = 0.0;
  std::string format = "json";

  const std::map<std::string, lsd::Command> commands = {
      {"decompose", lsd::Command::Decompose},
      {"separability", lsd::Command::Separability},
      {"concurrence", lsd::Command::Concurrence},
      {"oracle", lsd::Command::Oracle},
      {"verify", lsd::Command::Verify},
      {"selftest", lsd::Command::Selftest},
  };
  const std::map<std::string, std::string> help = {
      {"decompose", "optimal decomposition with verification block"},
      {"separability", "separability verdict"},
      {"concurrence", "spin-flip spectrum and basis of a two-qubit state"},
      {"oracle", "closed form against the numeric search"},
      {"verify", "re-check a decompose report against its state"},
      {"selftest", "run the built-in example battery"},
  };

  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    if (command != lsd::Command::Selftest) {
      sub->add_option("-i,--input", cfg.input, "spec file, '-' for stdin, or inline JSON")
          ->required();
    }
    sub->add_option("--tol", tol, "pass/fail tolerance for reconstruction checks")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for randomized searches");
    sub->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    if (command == lsd::Command::Decompose) {
      sub->add_flag("--oracle", cfg.oracle, "attach the numeric cross-check");
    }
    sub->callback([&cfg, command] { cfg.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lsd::kExitValidation;
  }
  for (const auto* sub : app.get_subcommands()) {
    if (sub->count("--tol") > 0) cfg.tol = tol;
  }
  cfg.format = format == "text" ? lsd::Format::Text : lsd::Format::Json;
  return lsd::run(cfg, std::cin, std::cout, std::cerr);
}
