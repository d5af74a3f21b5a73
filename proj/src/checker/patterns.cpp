#include <array>
#include <utility>

#include "patterns.hpp"

namespace sessionpi {

namespace {

constexpr std::array<std::pair<Rule, const char*>, 27> kRuleNames{{
    {Rule::inact, "A-INACT"},
    {Rule::par, "A-PAR"},
    {Rule::res, "A-RES"},
    {Rule::repl, "A-REPL"},
    {Rule::out_lin, "A-OUT-L"},
    {Rule::out_lin_left, "A-OUT-L-l"},
    {Rule::out_lin_right, "A-OUT-L-r"},
    {Rule::out_un, "A-OUT-UN"},
    {Rule::out_un_left, "A-OUT-UN-l"},
    {Rule::out_un_right, "A-OUT-UN-r"},
    {Rule::in_lin, "A-IN-L"},
    {Rule::in_lin_left, "A-IN-L-l"},
    {Rule::in_lin_right, "A-IN-L-r"},
    {Rule::in_un, "A-IN-UN"},
    {Rule::in_un_left, "A-IN-UN-l"},
    {Rule::in_un_right, "A-IN-UN-r"},
    {Rule::var_lin, "A-V-L"},
    {Rule::var_un, "A-V-U"},
    {Rule::var_lin_pair_straight, "A-V-LL-l"},
    {Rule::var_lin_pair_crossed, "A-V-LL-r"},
    {Rule::var_lin_left, "A-V-L-l"},
    {Rule::var_lin_right, "A-V-L-r"},
    {Rule::var_un_pair_straight, "A-V-UU-l"},
    {Rule::var_un_pair_crossed, "A-V-UU-r"},
    {Rule::var_un_left, "A-V-U-l"},
    {Rule::var_un_right, "A-V-U-r"},
    {Rule::var_un_ends, "A-V-EE"},
}};

constexpr std::array<std::pair<CheckError::Kind, const char*>, 5> kKindNames{{
    {CheckError::Kind::no_pattern, "NoPattern"},
    {CheckError::Kind::unsafe_annotation, "UnsafeAnnotation"},
    {CheckError::Kind::linear_residual, "LinearResidual"},
    {CheckError::Kind::non_unrestricted_result, "NonUnrestrictedResult"},
    {CheckError::Kind::partial_algebra, "PartialAlgebra"},
}};

std::optional<EndPoint> unfolded(const Slot& m) {
  if (m.is_void()) return std::nullopt;
  return unfold(m.type());
}

bool has_shape(const Slot& m, Qualifier q, Polarity pol) {
  auto u = unfolded(m);
  return u && u->qualifier() == q && u->polarity() == pol;
}

bool has_qualifier(const Slot& m, Qualifier q) {
  auto u = unfolded(m);
  return u && u->qualifier() == q;
}

bool is_un_end_slot(const Slot& m) { return has_shape(m, Qualifier::un, Polarity::end); }

bool slot_equals(const Slot& m, const EndPoint& s) { return !m.is_void() && type_equal(m.type(), s); }

bool slots_equal(const Slot& a, const Slot& b) {
  if (a.is_void() || b.is_void()) return a.is_void() && b.is_void();
  return type_equal(a.type(), b.type());
}

}  // namespace

std::string rule_name(Rule rule) {
  for (const auto& [r, name] : kRuleNames) {
    if (r == rule) return name;
  }
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
  for (const auto& [r, n] : kRuleNames) {
    if (name == n) return r;
  }
  return std::nullopt;
}

std::string kind_name(CheckError::Kind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<CheckError::Kind> kind_from_name(const std::string& name) {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) return k;
  }
  return std::nullopt;
}

CheckError::CheckError(Kind kind, std::string subject, SourcePos pos, std::string detail)
    : std::runtime_error(kind_name(kind) + " at " + subject + ": " + detail),
      kind_(kind),
      subject_(std::move(subject)),
      pos_(pos),
      detail_(std::move(detail)) {}

bool prefix_guard(const Slot& m, Qualifier q, Polarity pol) {
  if (!has_shape(m, q, pol)) return false;
  if (q == Qualifier::lin) return true;
  // An unrestricted prefix must be invariant under its own action.
  return type_equal(unfold(m.type()).continuation(), m.type());
}

std::vector<Rule> matching_rules(const Context& g, const Process& p) {
  std::vector<Rule> out;
  switch (p.kind()) {
    case Process::Kind::inaction:
      return {Rule::inact};
    case Process::Kind::parallel:
      return {Rule::par};
    case Process::Kind::restriction:
      return {Rule::res};
    case Process::Kind::replication:
      return {Rule::repl};
    case Process::Kind::output:
    case Process::Kind::input:
      break;
  }
  auto it = g.find(p.channel());
  if (it == g.end()) return out;
  const Entry& e = it->second;
  bool sending = p.kind() == Process::Kind::output;
  Polarity pol = sending ? Polarity::send : Polarity::receive;
  struct Candidate {
    Qualifier q;
    Side side;
    Rule rule;
  };
  const std::array<Candidate, 6> candidates{{
      {Qualifier::lin, Side::whole, sending ? Rule::out_lin : Rule::in_lin},
      {Qualifier::lin, Side::left, sending ? Rule::out_lin_left : Rule::in_lin_left},
      {Qualifier::lin, Side::right, sending ? Rule::out_lin_right : Rule::in_lin_right},
      {Qualifier::un, Side::whole, sending ? Rule::out_un : Rule::in_un},
      {Qualifier::un, Side::left, sending ? Rule::out_un_left : Rule::in_un_left},
      {Qualifier::un, Side::right, sending ? Rule::out_un_right : Rule::in_un_right},
  }};
  for (const auto& c : candidates) {
    if ((c.side == Side::whole) == e.is_pair()) continue;
    if (prefix_guard(e.slot(c.side), c.q, pol)) out.push_back(c.rule);
  }
  return out;
}

std::vector<Rule> matching_var_rules(const Context& g, const std::string& x, const Type& t) {
  std::vector<Rule> out;
  auto it = g.find(x);
  if (it == g.end()) return out;
  const Entry& e = it->second;
  if (!e.is_pair()) {
    if (t.is_channel()) return out;
    if (has_qualifier(e.first, Qualifier::lin) && slot_equals(e.first, t.first)) out.push_back(Rule::var_lin);
    if (has_qualifier(e.first, Qualifier::un) && slot_equals(e.first, t.first)) out.push_back(Rule::var_un);
    return out;
  }
  const Slot& m = e.first;
  const Slot& n = *e.second;
  if (t.is_channel()) {
    bool straight = slot_equals(m, t.left()) && slot_equals(n, t.right());
    bool crossed = slot_equals(m, t.right()) && slot_equals(n, t.left());
    if (has_qualifier(m, Qualifier::lin) && has_qualifier(n, Qualifier::lin)) {
      if (straight) out.push_back(Rule::var_lin_pair_straight);
      if (crossed) out.push_back(Rule::var_lin_pair_crossed);
    }
    if (has_qualifier(m, Qualifier::un) && has_qualifier(n, Qualifier::un)) {
      if (straight) out.push_back(Rule::var_un_pair_straight);
      // The crossed reading is only needed when it differs from the straight one.
      if (crossed && !slots_equal(m, n)) out.push_back(Rule::var_un_pair_crossed);
    }
    return out;
  }
  const EndPoint& s = t.first;
  if (has_qualifier(m, Qualifier::lin) && slot_equals(m, s)) out.push_back(Rule::var_lin_left);
  if (has_qualifier(n, Qualifier::lin) && slot_equals(n, s)) out.push_back(Rule::var_lin_right);
  if (has_qualifier(m, Qualifier::un) && slot_equals(m, s) && !slots_equal(m, n)) out.push_back(Rule::var_un_left);
  if (has_qualifier(n, Qualifier::un) && slot_equals(n, s) && !slots_equal(n, m)) out.push_back(Rule::var_un_right);
  if (is_un_end_slot(m) && is_un_end_slot(n) && is_un_end_slot(Slot::of(s))) out.push_back(Rule::var_un_ends);
  return out;
}

}  // namespace sessionpi
