#pragma once

// Deterministic pattern-based type checking. Every call inspects the shape of
// the context entry and of the subject, and at most one pattern applies; the
// result is the context left over after the linear resources used by the
// subject have been marked void.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sessionpi/syntax.hpp"
#include "sessionpi/types.hpp"

namespace sessionpi {

enum class Rule {
  inact,
  par,
  res,
  repl,
  out_lin,
  out_lin_left,
  out_lin_right,
  out_un,
  out_un_left,
  out_un_right,
  in_lin,
  in_lin_left,
  in_lin_right,
  in_un,
  in_un_left,
  in_un_right,
  var_lin,
  var_un,
  var_lin_pair_straight,
  var_lin_pair_crossed,
  var_lin_left,
  var_lin_right,
  var_un_pair_straight,
  var_un_pair_crossed,
  var_un_left,
  var_un_right,
  var_un_ends,
};

/// Printed rule label, e.g. "A-OUT-L-l" or "A-V-LL-r".
std::string rule_name(Rule rule);
std::optional<Rule> rule_from_name(const std::string& name);

struct TraceStep {
  Rule rule;
  int depth = 0;
  std::string subject;  // process text, or "x : T" for variables
  Context input;
  Context output;
  bool completed = false;
};

class CheckError : public std::runtime_error {
 public:
  enum class Kind { no_pattern, unsafe_annotation, linear_residual, non_unrestricted_result, partial_algebra };

  CheckError(Kind kind, std::string subject, SourcePos pos, std::string detail);

  Kind kind() const { return kind_; }
  const std::string& subject() const { return subject_; }
  SourcePos pos() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  std::string subject_;
  SourcePos pos_;
  std::string detail_;
};

std::string kind_name(CheckError::Kind kind);
std::optional<CheckError::Kind> kind_from_name(const std::string& name);

/// Raised when a runtime audit (domain preservation, safety of the output,
/// definedness of the used closure, uniqueness of the matching pattern) fails.
class AuditFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Deliberate defects used to show that the property suites detect bugs.
enum class Fault {
  none,
  /// Linear output keeps the continuation's residual for the channel instead
  /// of marking it void.
  output_keeps_residual,
};

struct CheckOptions {
  bool trace = false;
  /// Check domain preservation, output safety, used-closure definedness and
  /// pattern uniqueness at every call.
  bool audit = true;
  /// Record the number of matching patterns at every call.
  bool count_matches = false;
  Fault fault = Fault::none;
};

struct MatchCount {
  std::string subject;
  int matches = 0;
};

struct CheckResult {
  bool accepted = false;
  Process checked = Process::zero();  // the renamed process that was checked
  std::optional<Context> residual;
  std::optional<CheckError> error;
  std::vector<TraceStep> trace;
  std::vector<MatchCount> match_counts;
};

/// Rules whose guard holds for the given call; at most one on safe contexts.
std::vector<Rule> matching_rules(const Context& g, const Process& p);
std::vector<Rule> matching_var_rules(const Context& g, const std::string& x, const Type& t);

/// Types variable x at t, returning the context with the linear parts used
/// set to void. Throws CheckError.
Context check_var(const Context& g, const std::string& x, const Type& t, const CheckOptions& options = {});

/// The checking function proper. Expects a safe context and a process whose
/// binders are distinct from each other and from dom(g). Throws CheckError.
Context check(const Context& g, const Process& p, const CheckOptions& options = {});

/// Top-level entry point: rejects unsafe contexts, renames binders apart and
/// accepts when the residual context is unrestricted. Audit failures propagate
/// as AuditFailure.
CheckResult type_check(const Context& g, const Process& p, const CheckOptions& options = {});

/// Match counts for every call made while checking (g, p), whether or not
/// checking succeeds.
std::vector<MatchCount> audit_pattern_matches(const Context& g, const Process& p);

}  // namespace sessionpi
