#pragma once

// Equi-recursive type equality, well-pairedness (safe) and unrestrictedness
// predicates, and the algebra on algorithmic contexts whose entries may be
// marked void once a linear end point has been consumed.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sessionpi/syntax.hpp"

namespace sessionpi {

/// An end point type or the void marker.
class Slot {
 public:
  static Slot empty() { return Slot(); }
  static Slot of(EndPoint s) { return Slot(std::move(s)); }

  bool is_void() const { return !type_.has_value(); }
  const EndPoint& type() const;
  std::string key() const;

  friend bool operator==(const Slot& a, const Slot& b) { return a.key() == b.key(); }

 private:
  Slot() = default;
  explicit Slot(EndPoint s) : type_(std::move(s)) {}
  std::optional<EndPoint> type_;
};

enum class Side { whole, left, right };

/// Context entry: a single slot, or a pair <M, N> standing for the two ends of
/// one channel.
struct Entry {
  Slot first;
  std::optional<Slot> second;

  static Entry single(Slot m) { return Entry{std::move(m), std::nullopt}; }
  static Entry pair(Slot m, Slot n) { return Entry{std::move(m), std::move(n)}; }
  static Entry from_type(const Type& t);

  bool is_pair() const { return second.has_value(); }
  const Slot& slot(Side side) const;
  std::string key() const;

  friend bool operator==(const Entry& a, const Entry& b) { return a.key() == b.key(); }
};

using Context = std::map<std::string, Entry>;
using DeclContext = std::map<std::string, Type>;

/// Raised when a partial context operation is applied outside its domain.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Types --------------------------------------------------------------------

/// Substitutes the closed type `replacement` for free occurrences of `var`.
EndPoint substitute_type(const EndPoint& s, const std::string& var, const EndPoint& replacement);
Type substitute_type(const Type& t, const std::string& var, const EndPoint& replacement);

/// Unrolls leading recursive binders until a qualified type is reached.
EndPoint unfold(const EndPoint& s);

bool type_equal(const EndPoint& a, const EndPoint& b);
/// Equality of infinite unfoldings, with channel components commuting.
bool type_equal(const Type& a, const Type& b);

EndPoint dual(const EndPoint& s);

/// Continuations reachable from s by unfolding, up to type_equal; s first.
std::vector<EndPoint> descendants(const EndPoint& s);

// Predicates ----------------------------------------------------------------

bool is_safe_entry(const Entry& e);
bool is_safe_type(const Type& t);
bool is_safe_context(const Context& g);

bool is_un_slot(const Slot& m);
bool is_un_entry(const Entry& e);
bool is_un_context(const Context& g);

/// Unrestricted declarative type: `un p` or `<un p1, un p2>`.
bool is_un_type(const Type& t);
bool is_un_decl_context(const DeclContext& i);

bool entries_equal(const Entry& a, const Entry& b);
/// Same domain and entrywise type_equal.
bool contexts_equal(const Context& a, const Context& b);
bool decl_contexts_equal(const DeclContext& a, const DeclContext& b);

// Context algebra -----------------------------------------------------------

/// Replaces the void at `side` of g(x) by s. Throws AlgebraError otherwise.
Context update_entry(const Context& g, const std::string& x, Side side, const EndPoint& s);

/// Used closure g1 |> g2, pointwise.
Slot closure(const Slot& a, const Slot& b);
Entry closure(const Entry& a, const Entry& b);
Context closure(const Context& g1, const Context& g2);

/// Projection to a declarative context; void becomes `un end`.
Type used(const Entry& e);
DeclContext used_map(const Context& g);

/// Fully consumed shape: every linear component becomes void.
Entry nabla(const Entry& e);
Context nabla(const Context& g);

/// Pointwise update g1 (+) g2.
Slot update(const Slot& a, const Slot& b);
Entry update(const Entry& a, const Entry& b);
Context update_context(const Context& g1, const Context& g2);

Context to_context(const DeclContext& i);
/// Fails with AlgebraError if g contains a void slot.
DeclContext to_decl_context(const Context& g);

// Text ----------------------------------------------------------------------

/// One `name : entry` binding per line; `void` or U+25E6 marks a void slot.
Context parse_context(std::string_view src);
Entry parse_entry(std::string_view src);
std::string to_string(const Slot& m);
std::string to_string(const Entry& e);
std::string to_string(const Context& g);
std::string to_string(const DeclContext& i);

}  // namespace sessionpi
