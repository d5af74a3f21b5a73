#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "sessionpi/commands.hpp"

using namespace sessionpi;

int main(int argc, char** argv) {
  CLI::App app{"Type checker and tools for a session-typed pi calculus"};
  app.require_subcommand(1);

  std::string process_file;
  std::optional<std::string> context_file;
  bool json = false;
  CheckFlags flags;
  int bound = OracleOptions{}.bound;
  int steps = 10;
  FuzzOptions fuzz;

  auto add_common = [&](CLI::App* sub, bool with_context) {
    sub->add_option("process", process_file, "Process file")->required();
    if (with_context) sub->add_option("--ctx", context_file, "Typing context file (default: empty context)");
    sub->add_flag("--json", json, "Print the report as JSON");
  };

  CLI::App* check = app.add_subcommand("check", "Type check a process");
  add_common(check, true);
  check->add_flag("--trace", flags.trace, "Print the derivation trace");
  check->add_flag("--audit", flags.audit, "Report the number of matching patterns at every call");

  CLI::App* oracle = app.add_subcommand("oracle", "Compare the checker with the declarative system");
  add_common(oracle, true);
  oracle->add_option("--bound", bound, "Maximum derivation depth")->check(CLI::PositiveNumber);

  CLI::App* reduce = app.add_subcommand("reduce", "Print a reduction sequence");
  add_common(reduce, false);
  reduce->add_option("--steps", steps, "Maximum number of steps")->check(CLI::NonNegativeNumber);

  CLI::App* congruence = app.add_subcommand("congruence", "Check verdicts along random congruence rewrites");
  add_common(congruence, true);
  congruence->add_option("--iterations", fuzz.iterations, "Number of rewrites")->check(CLI::NonNegativeNumber);
  congruence->add_option("--seed", fuzz.seed, "Random seed");

  CLI::App* table = app.add_subcommand("table", "Recompute the table of contexts met in parallel composition");
  table->add_flag("--json", json, "Print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_code::usage;
  }

  RunReport report;
  if (check->parsed()) {
    report = cmd_check(process_file, context_file, flags);
  } else if (oracle->parsed()) {
    report = cmd_oracle(process_file, context_file, bound);
  } else if (reduce->parsed()) {
    report = cmd_reduce(process_file, steps);
  } else if (congruence->parsed()) {
    report = cmd_congruence_fuzz(process_file, context_file, fuzz);
  } else {
    report = cmd_table();
  }

  std::cout << (json ? report_to_json(report) : report_to_text(report));
  std::fprintf(stderr, "time: %.3f ms\n", report.timing_ms);
  return report.exit_code;
}
