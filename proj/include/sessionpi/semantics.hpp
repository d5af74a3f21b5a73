#pragma once

// Structural congruence as single rewrite steps, and the reduction relation.

#include <optional>
#include <string>
#include <vector>

#include "sessionpi/syntax.hpp"

namespace sessionpi {

enum class CongruenceRule {
  par_commute,      // P | Q == Q | P
  par_assoc,        // (P | Q) | R == P | (Q | R)
  par_unit,         // P | 0 == P
  repl_unfold,      // !P == P | !P
  scope_extrusion,  // (new x:T) P | Q == (new x:T)(P | Q), x not free in Q
  res_swap,         // (new x:T1)(new y:T2) P == (new y:T2)(new x:T1) P
  gc_un,            // (new x: un p) 0 == 0
  gc_un_pair,       // (new x: <un p1, un p2>) 0 == 0
};

/// forward rewrites the left-hand side as written above into the right-hand side.
enum class Direction { forward, backward };

std::string rule_name(CongruenceRule rule);
std::optional<CongruenceRule> congruence_rule_from_name(const std::string& name);
std::string direction_name(Direction d);

/// Child indices from the root: parallel 0/1 for left/right, every other
/// constructor 0 for its only subprocess.
using Path = std::vector<int>;
std::string to_string(const Path& path);

std::optional<Process> subterm(const Process& p, const Path& path);

struct RewriteStep {
  CongruenceRule rule;
  Direction direction;
  Path position;
  Process result;
};

/// Every single application of a congruence rule at any position. Symmetric
/// rules (commutation, restriction swap) are listed once; the two garbage
/// collection rules only in the erasing direction.
std::vector<RewriteStep> congruence_steps(const Process& p);

/// Applies one rule at one position, or nothing if it does not fit. Copies
/// made by unfolding a replication get fresh binders.
std::optional<Process> apply_rewrite(const Process& p, CongruenceRule rule, Direction direction, const Path& position);

/// The step that undoes the given one: same rule and position, opposite
/// direction (the same direction for symmetric rules).
Direction inverse_direction(CongruenceRule rule, Direction direction);

struct ReductionOptions {
  /// Maximum number of replications unfolded to find a communication.
  int unfold_radius = 3;
};

struct Reduction {
  Process result;
  std::string channel;  // subject of the communication
  int unfoldings = 0;
};

/// All communications available after bringing restrictions to the top,
/// flattening parallel composition and unfolding replications. Restriction
/// annotations are kept.
std::vector<Reduction> reductions(const Process& p, const ReductionOptions& options = {});
std::vector<Process> reduce_step(const Process& p, const ReductionOptions& options = {});

/// p followed by up to max_steps reducts, always taking the first one.
std::vector<Process> reduce_trace(const Process& p, int max_steps, const ReductionOptions& options = {});

}  // namespace sessionpi
