// symdg: construct the Γ_s and Σ digraphs, export them, and run the verification harness.
//
// Exit codes: 0 all claims pass, 1 a claim failed, 2 usage, parse or resource error.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace symdg::cli;

int main(int argc, char **argv)
{
  CLI::App app{"Construct and verify highly symmetric non-diagonalizable digraphs"};
  app.set_version_flag("--version", SYMDG_VERSION);
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  GlobalOptions global;
  app.add_option("--enum-bound", global.enumeration_bound, "largest group enumerated element by element")
    ->envname("SYMDG_ENUM_BOUND")
    ->check(CLI::PositiveNumber);
  app.add_option("--max-arcs", global.max_arcs, "largest s-arc set or tensor-power arc count")
    ->envname("SYMDG_MAX_ARCS")
    ->check(CLI::PositiveNumber);
  app.add_option("--jobs", global.jobs, "worker threads for independent claims")
    ->envname("SYMDG_JOBS")
    ->check(CLI::PositiveNumber);

  ConstructOptions construct;
  auto *construct_cmd = app.add_subcommand("construct", "build Γ_s or Σ and export it");
  construct_cmd->add_option("family", construct.family, "gamma or sigma")
    ->required()
    ->check(CLI::IsMember({"gamma", "sigma"}));
  construct_cmd->add_option("--s", construct.s, "Γ_s parameter, s >= 2")->check(CLI::Range(2, 30));
  construct_cmd->add_option("--power", construct.power, "tensor power n >= 1")->check(CLI::Range(1, 8));
  construct_cmd->add_option("--format", construct.format, "json, dot, matrix or text")
    ->envname("SYMDG_FORMAT")
    ->check(CLI::IsMember({"json", "dot", "matrix", "text"}));
  construct_cmd->add_option("--out", construct.out, "output file; a manifest is written next to it");
  construct_cmd->add_option("--dot-cap", construct.dot_cap, "largest digraph exported as DOT")
    ->check(CLI::PositiveNumber);

  VerifyCli verify;
  auto *verify_cmd = app.add_subcommand("verify", "run the verification harness");
  verify_cmd->add_option("scope", verify.scope, "all, gamma, sigma, tensor or kronecker")
    ->check(CLI::IsMember({"all", "gamma", "sigma", "tensor", "kronecker"}));
  verify_cmd->add_option("--s", verify.s_values, "Γ_s parameters, comma separated")
    ->delimiter(',')
    ->check(CLI::Range(2, 30));
  verify_cmd->add_option("--power", verify.power, "tensor power checked")->check(CLI::Range(2, 8));
  verify_cmd->add_option("--report", verify.report, "write the report (JSON if the name ends in .json)");
  verify_cmd->add_option("--format", verify.format, "stdout rendering: text or json")
    ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--inject-fault", verify.inject_fault, "corrupt the Γ_s witness generators");
  verify_cmd->add_flag("--quiet", verify.quiet, "print nothing on success");

  std::string minpoly_path;
  auto *minpoly_cmd = app.add_subcommand("minpoly", "minimal polynomial and diagonalizability of a matrix file");
  minpoly_cmd->add_option("file", minpoly_path, "\"rows cols\" then entries")->required();

  std::string fixtures_out;
  auto *fixtures_cmd = app.add_subcommand("fixtures", "export the transcribed word tables and matrices as JSON");
  fixtures_cmd->add_option("--out", fixtures_out, "output file (stdout if omitted)");

  std::string group_path;
  auto *group_cmd = app.add_subcommand("group", "order, transitivity and primitivity of a group spec");
  group_cmd->add_option("file", group_path, "{\"degree\": n, \"generators\": [...]}")->required();

  std::string inspect_path;
  auto *inspect_cmd = app.add_subcommand("inspect", "re-check an exported JSON digraph");
  inspect_cmd->add_option("file", inspect_path, "digraph JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*construct_cmd)
      return run_construct(construct, global);
    if (*verify_cmd)
      return run_verify(verify, global);
    if (*minpoly_cmd)
      return run_minpoly(minpoly_path);
    if (*fixtures_cmd)
      return run_fixtures(fixtures_out);
    if (*group_cmd)
      return run_group(group_path);
    if (*inspect_cmd)
      return run_inspect(inspect_path);
  } catch (std::exception const &e) {
    std::cerr << "symdg: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
