#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "parsmash/errors.hpp"

using namespace parsmash;

int main(int argc, char** argv) {
  CLI::App app{"parsmash: partial actions, partial group algebras and their cohomology"};
  app.require_subcommand(1);

  std::string input, out_path, field, checks = "strict", format = "json";
  std::size_t max_degree = 0, budget = 0;
  bool timings = false;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "parse the problem and run every axiom check"},
      {"smash", "build the partial smash product and emit its structure constants"},
      {"kpar", "emit B, K_par G, epsilon and a basis of IG"},
      {"hpar", "partial group cohomology of a K_par G-module"},
      {"hochschild", "Hochschild cohomology dimensions through the bar complex"},
      {"spectral-check", "low-degree consistency checks for the spectral sequence"},
      {"orthogonalize", "orthogonal idempotent basis and principal generators of a semilattice algebra"},
      {"run", "run the problem's task list"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "problem file (JSON)")->required();
    sub->add_option("--field", field, "override the field, e.g. Q or F2");
    sub->add_option("--max-degree", max_degree, "highest cohomological degree");
    sub->add_option("--budget", budget, "size limit for free modules and cochain spaces");
    sub->add_option("--checks", checks, "strict or warn")->check(CLI::IsMember({"strict", "warn"}));
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_flag("--timings", timings, "include wall-clock timings in the report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_input_error;
  }

  cli::Options opts;
  if (!field.empty()) opts.field = field;
  if (max_degree > 0) opts.max_degree = max_degree;
  opts.mode = checks == "warn" ? CheckMode::warn : CheckMode::strict;
  opts.timings = timings;
  try {
    opts.budget = budget > 0 ? std::optional<std::size_t>(budget) : cli::budget_from_env();
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return cli::exit_input_error;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  cli::Outcome o = cli::execute(command, input, opts, format == "tsv" ? cli::Format::tsv : cli::Format::json);
  if (out_path.empty()) {
    std::cout << o.output;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return cli::exit_input_error;
    }
    f << o.output;
  }
  return o.code;
}
