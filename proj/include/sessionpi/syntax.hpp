#pragma once

// Abstract syntax of the session-typed pi calculus: qualified end-point types,
// channel pair types, and annotated processes. All values are immutable and
// share structure through reference-counted nodes.

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sessionpi {

enum class Qualifier { lin, un };

/// Shape of a pre-type: `?T.S`, `!T.S` or `end`.
enum class Polarity { receive, send, end };

struct SourcePos {
  int line = 0;
  int column = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourcePos pos);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

struct Type;

/// End-point type S ::= q p | a | rec a.S
class EndPoint {
 public:
  enum class Kind { qualified, variable, recursive };

  static EndPoint qualified(Qualifier q, Polarity polarity, Type payload, EndPoint continuation);
  static EndPoint end(Qualifier q);
  static EndPoint variable(std::string name);
  static EndPoint recursive(std::string binder, EndPoint body);

  Kind kind() const;
  bool is_qualified() const { return kind() == Kind::qualified; }

  // qualified
  Qualifier qualifier() const;
  Polarity polarity() const;
  const Type& payload() const;
  const EndPoint& continuation() const;

  // variable name, or binder of a recursive type
  const std::string& name() const;
  // recursive
  const EndPoint& body() const;

  /// Canonical text of the type; equal keys mean syntactically equal types.
  const std::string& key() const;

  bool same_node(const EndPoint& other) const { return node_ == other.node_; }

  friend bool operator==(const EndPoint& a, const EndPoint& b);

  struct Node;

 private:
  explicit EndPoint(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// T ::= S | <S, S>
struct Type {
  EndPoint first;
  std::shared_ptr<const EndPoint> second;  // set for channel types

  static Type end_point(EndPoint s) { return Type{std::move(s), nullptr}; }
  static Type channel(EndPoint left, EndPoint right) {
    return Type{std::move(left), std::make_shared<const EndPoint>(std::move(right))};
  }

  bool is_channel() const { return second != nullptr; }
  const EndPoint& end_point() const { return first; }
  const EndPoint& left() const { return first; }
  const EndPoint& right() const { return *second; }

  std::string key() const;

  friend bool operator==(const Type& a, const Type& b);
};

class Process {
 public:
  enum class Kind { inaction, parallel, replication, output, input, restriction };

  static Process zero(SourcePos pos = {});
  static Process par(Process left, Process right, SourcePos pos = {});
  static Process repl(Process body, SourcePos pos = {});
  static Process output(std::string channel, std::string argument, Process continuation,
                        SourcePos pos = {});
  static Process input(std::string channel, std::string binder, Process continuation,
                       SourcePos pos = {});
  static Process restrict(std::string binder, Type annotation, Process continuation,
                          SourcePos pos = {});

  Kind kind() const;
  SourcePos pos() const;

  // parallel
  const Process& left() const;
  const Process& right() const;
  // replication
  const Process& body() const;
  // output, input, restriction
  const Process& continuation() const;
  // output, input
  const std::string& channel() const;
  // output
  const std::string& argument() const;
  // input, restriction
  const std::string& binder() const;
  // restriction
  const Type& annotation() const;

  /// Number of constructors in the term.
  std::size_t size() const;

  const void* identity() const { return node_.get(); }

  /// Structural equality; source positions are ignored.
  friend bool operator==(const Process& a, const Process& b);

  struct Node;

 private:
  explicit Process(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Parsing. Errors are reported as ParseError with line and column.
Process parse_process(std::string_view src);
Type parse_type(std::string_view src);
EndPoint parse_end_point(std::string_view src);

// Printing. Output re-parses to a structurally equal value.
std::string to_string(Qualifier q);
std::string to_string(const EndPoint& s);
std::string to_string(const Type& t);
std::string to_string(const Process& p);

// Binding.
std::set<std::string> free_vars(const Process& p);
/// Every name occurring in p, free or bound.
std::set<std::string> all_names(const Process& p);
/// p{replacement/target}. Throws std::logic_error if a binder would capture
/// the replacement.
Process substitute(const Process& p, const std::string& replacement, const std::string& target);
/// Alpha-renames binders so that they are pairwise distinct and disjoint from
/// free_vars(p) and from `avoid`. A clashing binder `y` becomes `y1`, `y2`, ...
Process barendregt_rename(const Process& p, const std::set<std::string>& avoid = {});
/// Renames every binder of p to a name outside `avoid`; used to copy a term
/// next to itself.
Process fresh_copy(const Process& p, const std::set<std::string>& avoid);
bool alpha_equal(const Process& a, const Process& b);
/// True when binders are pairwise distinct and distinct from free names.
bool satisfies_variable_convention(const Process& p);

}  // namespace sessionpi
