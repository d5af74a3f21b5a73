#pragma once

// Subcommands of the command-line tool as library functions returning a
// report that renders either as text or as JSON.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sessionpi/checker.hpp"
#include "sessionpi/declarative.hpp"
#include "sessionpi/semantics.hpp"

namespace sessionpi {

namespace exit_code {
constexpr int accepted = 0;  // accepted, agreeing, or no divergence
constexpr int rejected = 1;  // rejected, disagreeing, or diverging
constexpr int usage = 2;     // bad arguments, unreadable or unparsable input
constexpr int inconclusive = 3;
}  // namespace exit_code

struct ReductionRecord {
  int index = 0;
  std::string channel;  // empty for the initial term
  int unfoldings = 0;
  std::string term;
};

struct Divergence {
  int iteration = 0;
  std::string rule;
  std::string direction;
  std::string position;
  std::string source;
  std::string result;
  bool source_accepted = false;
  bool result_accepted = false;
};

constexpr std::size_t kTableColumns = 8;
using TableCells = std::array<std::string, kTableColumns>;

struct TableRow {
  int row = 0;
  TableCells expected;
  TableCells computed;
  /// G1 = (G2 |> G3) (+) G4
  bool first_equation = false;
  /// G4 = (G1 |> G2) (+) G3
  bool second_equation = false;
  /// nabla G1 = nabla G2
  bool shared_nabla = false;
  bool matches = false;
  /// Set when the expected row carries a corrected cell.
  std::string note;
};

struct RunReport {
  std::string command;
  bool accepted = false;
  int exit_code = exit_code::accepted;
  std::optional<Context> residual;
  std::optional<CheckError> error;
  /// Input, usage or internal failure that prevented the command from running.
  std::optional<std::string> failure;
  std::vector<TraceStep> trace;
  std::vector<MatchCount> match_counts;
  std::optional<Verdict> oracle_verdict;
  std::optional<std::string> agreement;  // agree, disagree, inconclusive
  std::optional<std::int64_t> oracle_nodes;
  std::vector<ReductionRecord> reductions;
  std::optional<int> iterations;
  std::optional<Divergence> divergence;
  std::vector<TableRow> table;
  /// Wall-clock time; reported separately so that reports are reproducible.
  double timing_ms = 0;
};

/// Deterministic JSON rendering; timing is left out.
std::string report_to_json(const RunReport& report);
/// Inverse of report_to_json. Throws std::invalid_argument on malformed input.
RunReport report_from_json(const std::string& text);
std::string report_to_text(const RunReport& report);

struct CheckFlags {
  bool trace = false;
  /// Attach the number of matching patterns at every call.
  bool audit = false;
};

/// An absent context file means the empty context.
RunReport cmd_check(const std::string& process_file, const std::optional<std::string>& context_file,
                    const CheckFlags& flags = {});

/// Runs the checker and the declarative search side by side.
RunReport cmd_oracle(const std::string& process_file, const std::optional<std::string>& context_file,
                     int bound = OracleOptions{}.bound);

RunReport cmd_reduce(const std::string& process_file, int steps);

struct FuzzOptions {
  int iterations = 500;
  std::uint64_t seed = 1;
  Fault fault = Fault::none;
};

/// Random walk of single congruence rewrites, re-checking after each one.
RunReport cmd_congruence_fuzz(const std::string& process_file, const std::optional<std::string>& context_file,
                              const FuzzOptions& options = {});

/// Recomputes the table of context shapes met when checking a parallel
/// composition and compares it with the expected one.
RunReport cmd_table();

/// Expected table in symbolic form: cells are `void`, `lin p`, `un p`, or pairs
/// such as `<lin p1, void>`. Columns: G1, G2, G3, G1|>G2, G2|>G3, G1|>G3, G4,
/// nabla.
const std::vector<TableCells>& parallel_table();

/// A cell of the expected table whose printed value contradicts the closure
/// definition; parallel_table() holds the corrected value.
struct TableErratum {
  int row;
  std::size_t column;
  std::string printed;
  std::string corrected;
  std::string reason;
};
const std::vector<TableErratum>& parallel_table_errata();

}  // namespace sessionpi
