#pragma once

// Split-based declarative typing as a bounded search. Used as a reference
// for the algorithmic checker: whatever the checker accepts must be derivable
// here, and reducts of accepted processes must remain derivable.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sessionpi/syntax.hpp"
#include "sessionpi/types.hpp"

namespace sessionpi {

/// origin = left . right
struct Split {
  DeclContext left;
  DeclContext right;
  DeclContext origin;
};

/// Every split of i, without duplicates.
std::vector<Split> enumerate_splits(const DeclContext& i);

/// Splits in which a linear part of x only goes to a side whose name set
/// contains x. Splits excluded this way cannot type a process whose free
/// names on that side are the given set.
std::vector<Split> enumerate_splits(const DeclContext& i, const std::set<std::string>& left_names,
                                    const std::set<std::string>& right_names);

/// i |- v : t, by Var possibly followed by Strength.
bool derivable_value(const DeclContext& i, const std::string& v, const Type& t);

enum class Verdict { derivable, not_derivable, inconclusive };

std::string verdict_name(Verdict v);
std::optional<Verdict> verdict_from_name(const std::string& name);

struct OracleOptions {
  /// Maximum nesting of process rules in a derivation.
  int bound = 32;
  /// Maximum number of process judgments explored.
  std::int64_t node_budget = 2'000'000;
  /// Also try, at each restriction, every safe type whose components are
  /// continuations of the annotation's components, and `un end`. Reducts of
  /// a typed process keep their original annotations while the channel's
  /// type has moved on.
  bool reannotate_restrictions = false;
};

struct OracleResult {
  Verdict verdict = Verdict::not_derivable;
  std::int64_t nodes = 0;
  /// Set when the depth bound or node budget cut the search short.
  bool bound_exceeded = false;
};

/// Searches for a derivation of i |- p. Binders of p are renamed apart from
/// dom(i) first.
OracleResult derivable(const DeclContext& i, const Process& p, const OracleOptions& options = {});

/// Candidate types that a name of type t may have after some communication:
/// t itself first, then the safe combinations of component continuations.
std::vector<Type> evolved_types(const Type& t);

struct ContextSearch {
  Verdict verdict = Verdict::not_derivable;
  std::optional<DeclContext> found;
  std::int64_t candidates = 0;
};

/// Looks for a safe context over dom(original), each entry drawn from
/// evolved_types of the original entry, under which p is derivable.
/// Restriction annotations may be re-chosen the same way.
ContextSearch find_typing_context(const DeclContext& original, const Process& p, const OracleOptions& options = {},
                                  std::int64_t max_candidates = 20'000);

}  // namespace sessionpi
