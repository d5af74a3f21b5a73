#pragma once

// Random and exhaustive generators of types, processes and contexts used by
// the property suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sessionpi/syntax.hpp"
#include "sessionpi/types.hpp"

namespace sessionpi::testing {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
bool coin(Rng& rng, double p = 0.5);

/// Closed, contractive end point type of bounded depth. Recursion variables
/// only appear under a prefix, so every generated type is contractive.
EndPoint random_end_point(Rng& rng, int depth);
Type random_type(Rng& rng, int depth);

/// A type related to `s` by equality-preserving rewrites (unfolding, binder
/// renaming, rolling, payload commutation), or occasionally a perturbed copy.
EndPoint related_end_point(Rng& rng, const EndPoint& s);

/// Untyped random process over the given free names.
Process random_process(Rng& rng, int size, const std::vector<std::string>& free_names,
                       const std::vector<Type>& annotations);

/// The six-type universe used by the exhaustive enumeration.
std::vector<Type> type_universe();

/// Every process of size <= max_size over `free_names`. Binders are fresh
/// (b0, b1, ...) and restriction annotations range over `annotations`.
std::vector<Process> enumerate_processes(int max_size, const std::vector<std::string>& free_names,
                                         const std::vector<Type>& annotations);

/// Every context with domain `names` and types from `universe`.
std::vector<Context> enumerate_contexts(const std::vector<std::string>& names,
                                        const std::vector<Type>& universe);

/// A random finite linear session, ending in `un end`, whose payloads are
/// either `un end` or (for delegation) smaller sessions.
EndPoint random_session(Rng& rng, int length, int nesting);

struct TypedInstance {
  Context context;
  Process process;
};

/// Well-typed-by-construction system: a restricted channel whose two ends run
/// dual protocols, composed with unrestricted noise threads. With `perturb`
/// one random mutation is applied, which usually makes it ill-typed.
TypedInstance random_protocol_instance(Rng& rng, int sessions, int length, bool perturb);

/// Safe context over {a, b, c} plus a random process mentioning those names.
TypedInstance random_safe_instance(Rng& rng, int size);

}  // namespace sessionpi::testing
