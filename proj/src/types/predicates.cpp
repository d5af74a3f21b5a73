#include <set>
#include <utility>

#include "sessionpi/types.hpp"

namespace sessionpi {

const EndPoint& Slot::type() const {
  if (!type_) throw AlgebraError("void slot has no type");
  return *type_;
}

std::string Slot::key() const { return type_ ? type_->key() : "\xE2\x97\xA6"; }

Entry Entry::from_type(const Type& t) {
  if (!t.is_channel()) return single(Slot::of(t.first));
  return pair(Slot::of(t.left()), Slot::of(t.right()));
}

const Slot& Entry::slot(Side side) const {
  if (side == Side::right) {
    if (!second) throw AlgebraError("entry " + key() + " has no right component");
    return *second;
  }
  if (side == Side::left && !second) throw AlgebraError("entry " + key() + " is not a pair");
  return first;
}

std::string Entry::key() const {
  if (!second) return first.key();
  return "<" + first.key() + ", " + second->key() + ">";
}

namespace {

bool is_un_end(const EndPoint& s) {
  EndPoint u = unfold(s);
  return u.is_qualified() && u.qualifier() == Qualifier::un && u.polarity() == Polarity::end;
}

using Visited = std::set<std::pair<std::string, std::string>>;

bool safe_type(const Type& t, Visited& visited);

bool safe_pair(const Slot& m1, const Slot& m2, Visited& visited) {
  if (m1.is_void() || m2.is_void()) return true;
  if (is_un_end(m1.type()) || is_un_end(m2.type())) return true;
  // Recursive linear protocols revisit the same pair; safety is the greatest
  // fixed point, so a revisited pair holds.
  if (!visited.emplace(m1.key(), m2.key()).second) return true;
  EndPoint a = unfold(m1.type());
  EndPoint b = unfold(m2.type());
  if (a.qualifier() != b.qualifier()) return false;
  if (a.polarity() == Polarity::end || b.polarity() == Polarity::end) return false;
  if (a.polarity() == b.polarity()) return false;
  const EndPoint& in = a.polarity() == Polarity::receive ? a : b;
  const EndPoint& out = a.polarity() == Polarity::receive ? b : a;
  if (!type_equal(in.payload(), out.payload())) return false;
  if (!safe_type(in.payload(), visited)) return false;
  if (a.qualifier() == Qualifier::un) return true;
  return safe_pair(Slot::of(in.continuation()), Slot::of(out.continuation()), visited);
}

bool safe_type(const Type& t, Visited& visited) {
  if (!t.is_channel()) return true;
  return safe_pair(Slot::of(t.left()), Slot::of(t.right()), visited);
}

}  // namespace

bool is_safe_entry(const Entry& e) {
  if (!e.is_pair()) return true;
  Visited visited;
  return safe_pair(e.first, *e.second, visited);
}

bool is_safe_type(const Type& t) { return is_safe_entry(Entry::from_type(t)); }

bool is_safe_context(const Context& g) {
  for (const auto& [name, entry] : g) {
    if (!is_safe_entry(entry)) return false;
  }
  return true;
}

bool is_un_slot(const Slot& m) {
  if (m.is_void()) return true;
  EndPoint u = unfold(m.type());
  return u.is_qualified() && u.qualifier() == Qualifier::un;
}

bool is_un_entry(const Entry& e) {
  return is_un_slot(e.first) && (!e.is_pair() || is_un_slot(*e.second));
}

bool is_un_context(const Context& g) {
  for (const auto& [name, entry] : g) {
    if (!is_un_entry(entry)) return false;
  }
  return true;
}

bool is_un_type(const Type& t) {
  if (!is_un_slot(Slot::of(t.first))) return false;
  return !t.is_channel() || is_un_slot(Slot::of(t.right()));
}

bool is_un_decl_context(const DeclContext& i) {
  for (const auto& [name, t] : i) {
    if (!is_un_type(t)) return false;
  }
  return true;
}

namespace {

bool slots_equal(const Slot& a, const Slot& b) {
  if (a.is_void() || b.is_void()) return a.is_void() && b.is_void();
  return type_equal(a.type(), b.type());
}

}  // namespace

bool entries_equal(const Entry& a, const Entry& b) {
  if (a.is_pair() != b.is_pair()) return false;
  if (!a.is_pair()) return slots_equal(a.first, b.first);
  return slots_equal(a.first, b.first) && slots_equal(*a.second, *b.second);
}

bool contexts_equal(const Context& a, const Context& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !entries_equal(ia->second, ib->second)) return false;
  }
  return true;
}

bool decl_contexts_equal(const DeclContext& a, const DeclContext& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !type_equal(ia->second, ib->second)) return false;
  }
  return true;
}

}  // namespace sessionpi
