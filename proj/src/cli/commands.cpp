#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "sessionpi/commands.hpp"

namespace sessionpi {

namespace {

// Raised for unreadable or unparsable inputs; carries the report message.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename F>
auto parse_file(const std::string& path, F parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError{path + ":" + e.what()};
  }
}

Process load_process(const std::string& path) {
  return parse_file(path, [](const std::string& text) { return parse_process(text); });
}

Context load_context(const std::optional<std::string>& path) {
  if (!path) return {};
  return parse_file(*path, [](const std::string& text) { return parse_context(text); });
}

// Runs body, filling in timing and turning input and audit failures into
// reports.
template <typename F>
RunReport run(const std::string& command, F body) {
  auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = command;
  try {
    body(report);
  } catch (const InputError& e) {
    report.accepted = false;
    report.failure = e.message;
    report.exit_code = exit_code::usage;
  } catch (const AuditFailure& e) {
    report.accepted = false;
    report.failure = std::string("audit failure: ") + e.what();
    report.exit_code = exit_code::rejected;
  }
  report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool same_outcome(const CheckResult& a, const CheckResult& b) {
  if (a.accepted != b.accepted) return false;
  return !a.accepted || contexts_equal(*a.residual, *b.residual);
}

}  // namespace

RunReport cmd_check(const std::string& process_file, const std::optional<std::string>& context_file,
                    const CheckFlags& flags) {
  return run("check", [&](RunReport& report) {
    Process p = load_process(process_file);
    Context g = load_context(context_file);
    CheckOptions options;
    options.trace = flags.trace;
    options.count_matches = flags.audit;
    CheckResult result = type_check(g, p, options);
    report.accepted = result.accepted;
    report.residual = std::move(result.residual);
    report.error = std::move(result.error);
    report.trace = std::move(result.trace);
    report.match_counts = std::move(result.match_counts);
    report.exit_code = report.accepted ? exit_code::accepted : exit_code::rejected;
  });
}

RunReport cmd_oracle(const std::string& process_file, const std::optional<std::string>& context_file, int bound) {
  return run("oracle", [&](RunReport& report) {
    Process p = load_process(process_file);
    Context g = load_context(context_file);
    DeclContext i;
    try {
      i = to_decl_context(g);
    } catch (const AlgebraError&) {
      throw InputError{"the declarative system has no void entries"};
    }
    CheckResult checked = type_check(g, p);
    report.accepted = checked.accepted;
    report.residual = std::move(checked.residual);
    report.error = std::move(checked.error);
    OracleOptions options;
    options.bound = bound;
    OracleResult oracle = derivable(i, p, options);
    report.oracle_verdict = oracle.verdict;
    report.oracle_nodes = oracle.nodes;
    if (oracle.verdict == Verdict::inconclusive) {
      report.agreement = "inconclusive";
      report.exit_code = exit_code::inconclusive;
    } else if (report.accepted == (oracle.verdict == Verdict::derivable)) {
      report.agreement = "agree";
      report.exit_code = exit_code::accepted;
    } else {
      report.agreement = "disagree";
      report.exit_code = exit_code::rejected;
    }
  });
}

RunReport cmd_reduce(const std::string& process_file, int steps) {
  return run("reduce", [&](RunReport& report) {
    if (steps < 0) throw InputError{"the number of steps must not be negative"};
    Process current = barendregt_rename(load_process(process_file));
    report.reductions.push_back({0, "", 0, to_string(current)});
    for (int step = 1; step <= steps; ++step) {
      std::vector<Reduction> next = reductions(current);
      if (next.empty()) break;
      current = next.front().result;
      report.reductions.push_back({step, next.front().channel, next.front().unfoldings, to_string(current)});
    }
    report.accepted = true;
    report.exit_code = exit_code::accepted;
  });
}

RunReport cmd_congruence_fuzz(const std::string& process_file, const std::optional<std::string>& context_file,
                              const FuzzOptions& options) {
  return run("congruence", [&](RunReport& report) {
    if (options.iterations < 0) throw InputError{"the number of iterations must not be negative"};
    Context g = load_context(context_file);
    std::set<std::string> avoid;
    for (const auto& [name, entry] : g) avoid.insert(name);
    Process current = barendregt_rename(load_process(process_file), avoid);
    CheckOptions check_options;
    check_options.fault = options.fault;
    check_options.audit = options.fault == Fault::none;
    CheckResult verdict = type_check(g, current, check_options);
    report.accepted = verdict.accepted;
    report.residual = verdict.residual;
    report.error = verdict.error;

    // Keep the walk near the original size by refusing growing rewrites
    // once the term has doubled.
    const std::size_t limit = 2 * current.size() + 8;
    std::mt19937_64 rng(options.seed);
    int done = 0;
    for (; done < options.iterations; ++done) {
      std::vector<RewriteStep> steps = congruence_steps(current);
      if (current.size() >= limit) {
        std::vector<RewriteStep> shrinking;
        for (auto& s : steps) {
          bool grows = (s.rule == CongruenceRule::par_unit && s.direction == Direction::backward) ||
                       (s.rule == CongruenceRule::repl_unfold && s.direction == Direction::forward);
          if (!grows) shrinking.push_back(std::move(s));
        }
        if (!shrinking.empty()) steps = std::move(shrinking);
      }
      std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
      RewriteStep& step = steps[pick(rng)];
      CheckResult next = type_check(g, step.result, check_options);
      if (!same_outcome(verdict, next)) {
        report.divergence = Divergence{done + 1,
                                       rule_name(step.rule),
                                       direction_name(step.direction),
                                       to_string(step.position),
                                       to_string(current),
                                       to_string(step.result),
                                       verdict.accepted,
                                       next.accepted};
        ++done;
        break;
      }
      current = std::move(step.result);
      verdict = std::move(next);
    }
    report.iterations = done;
    report.exit_code = report.divergence ? exit_code::rejected : exit_code::accepted;
  });
}

}  // namespace sessionpi
