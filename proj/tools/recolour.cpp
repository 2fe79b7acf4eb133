// recolour: shortest-path questions between graph colourings.
//
//   recolour solve  <instance> [--witness FILE] [--force-solver NAME]
//   recolour oracle <instance> [--max-states N] [--witness FILE]
//   recolour gen-hs <hitting-set> [-k K] [--out PREFIX]
//   recolour verify <instance> <witness>
//
// Global: --json, --seed <u64>. Exit codes: 0 yes, 1 no, 2 inconclusive,
// 3 error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "recolour/commands.hpp"

int main(int argc, char** argv) {
  using namespace recolour::cli;

  CLI::App app{"Recolouring distance between proper graph colourings"};
  app.require_subcommand(1);
  bool json = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json, "Print a machine-readable JSON report");
  app.add_option("--seed", seed, "Seed for random-instance helpers (reserved)");

  std::string instance, witness_file, hs_file;
  SolveOptions solve_opt;
  std::string witness_out, force;

  auto* solve = app.add_subcommand("solve", "Decide an instance with the solver for its k");
  solve->add_option("instance", instance, "Instance file")->required();
  solve->add_option("--witness", witness_out, "Write the witness here");
  solve->add_option("--force-solver", force, "exact-small-k | solver3 | fpt | oracle");

  std::size_t max_states = recolour::StateSpaceLimits{}.max_states;
  auto* oracle = app.add_subcommand("oracle", "Breadth-first search over all colourings");
  oracle->add_option("instance", instance, "Instance file")->required();
  oracle->add_option("--max-states", max_states, "Cap on visited colourings")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--witness", witness_out, "Write the witness here");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen-hs", "Build a gadget instance from a Hitting Set file");
  gen->add_option("hitting-set", hs_file, "Hitting Set file")->required();
  gen->add_option("-k", gen_opt.k, "Palette size (>= 4)");
  gen->add_option("--out", gen_opt.out_prefix, "Output prefix");

  auto* verify = app.add_subcommand("verify", "Check a witness against an instance");
  verify->add_option("instance", instance, "Instance file")->required();
  verify->add_option("witness", witness_file, "Witness file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kErrorExit;
  }

  try {
    RunReport report;
    if (*solve) {
      if (!witness_out.empty()) solve_opt.witness_path = witness_out;
      if (!force.empty()) solve_opt.force_solver = force;
      report = cmd_solve(instance, solve_opt);
    } else if (*oracle) {
      report = cmd_oracle(instance, max_states,
                          witness_out.empty() ? std::nullopt
                                              : std::optional<std::string>(witness_out));
    } else if (*gen) {
      report = cmd_gen_hs(hs_file, gen_opt);
    } else {
      report = cmd_verify(instance, witness_file);
    }
    print_report(std::cout, report, json);
    return exit_code(report.decision);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kErrorExit;
  }
}
