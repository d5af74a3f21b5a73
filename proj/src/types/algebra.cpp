#include "sessionpi/types.hpp"

namespace sessionpi {

namespace {

bool is_lin(const Slot& m) { return !m.is_void() && !is_un_slot(m); }

void require_same_shape(const Entry& a, const Entry& b, const char* op) {
  if (a.is_pair() != b.is_pair()) {
    throw AlgebraError(std::string(op) + " undefined on " + a.key() + " and " + b.key());
  }
}

void require_same_domain(const Context& g1, const Context& g2, const char* op) {
  bool same = g1.size() == g2.size();
  for (auto i = g1.begin(), j = g2.begin(); same && i != g1.end(); ++i, ++j) {
    same = i->first == j->first;
  }
  if (!same) throw AlgebraError(std::string(op) + " requires equal domains");
}

}  // namespace

Context update_entry(const Context& g, const std::string& x, Side side, const EndPoint& s) {
  auto it = g.find(x);
  if (it == g.end()) throw AlgebraError("'" + x + "' is not in the context");
  Entry e = it->second;
  if (side == Side::whole) {
    if (e.is_pair() || !e.first.is_void()) {
      throw AlgebraError("cannot update '" + x + "' at " + e.key() + ": entry is not void");
    }
    e.first = Slot::of(s);
  } else {
    if (!e.is_pair() || !e.slot(side).is_void()) {
      throw AlgebraError("cannot update '" + x + "' at " + e.key() + ": component is not void");
    }
    (side == Side::left ? e.first : *e.second) = Slot::of(s);
  }
  Context out = g;
  out.insert_or_assign(x, std::move(e));
  return out;
}

Slot closure(const Slot& a, const Slot& b) {
  if (a.is_void() && b.is_void()) return a;
  if (!a.is_void()) {
    if (b.is_void()) {
      if (is_lin(a)) return a;
    } else if (is_lin(a) == is_lin(b) && type_equal(a.type(), b.type())) {
      return is_lin(a) ? Slot::empty() : a;
    }
  }
  throw AlgebraError("used closure undefined on " + a.key() + " and " + b.key());
}

Entry closure(const Entry& a, const Entry& b) {
  require_same_shape(a, b, "used closure");
  if (!a.is_pair()) return Entry::single(closure(a.first, b.first));
  return Entry::pair(closure(a.first, b.first), closure(*a.second, *b.second));
}

Context closure(const Context& g1, const Context& g2) {
  require_same_domain(g1, g2, "used closure");
  Context out;
  for (auto i = g1.begin(), j = g2.begin(); i != g1.end(); ++i, ++j) {
    out.emplace(i->first, closure(i->second, j->second));
  }
  return out;
}

Type used(const Entry& e) {
  auto project = [](const Slot& m) { return m.is_void() ? EndPoint::end(Qualifier::un) : m.type(); };
  if (!e.is_pair()) return Type::end_point(project(e.first));
  return Type::channel(project(e.first), project(*e.second));
}

DeclContext used_map(const Context& g) {
  DeclContext out;
  for (const auto& [name, entry] : g) out.emplace(name, used(entry));
  return out;
}

Entry nabla(const Entry& e) {
  auto consume = [](const Slot& m) { return is_lin(m) ? Slot::empty() : m; };
  if (!e.is_pair()) return Entry::single(consume(e.first));
  return Entry::pair(consume(e.first), consume(*e.second));
}

Context nabla(const Context& g) {
  Context out;
  for (const auto& [name, entry] : g) out.emplace(name, nabla(entry));
  return out;
}

Slot update(const Slot& a, const Slot& b) {
  if (a.is_void()) return b;
  if (b.is_void()) return a;
  if (!is_lin(a) && !is_lin(b) && type_equal(a.type(), b.type())) return a;
  throw AlgebraError("update undefined on " + a.key() + " and " + b.key());
}

Entry update(const Entry& a, const Entry& b) {
  require_same_shape(a, b, "update");
  if (!a.is_pair()) return Entry::single(update(a.first, b.first));
  return Entry::pair(update(a.first, b.first), update(*a.second, *b.second));
}

Context update_context(const Context& g1, const Context& g2) {
  require_same_domain(g1, g2, "update");
  Context out;
  for (auto i = g1.begin(), j = g2.begin(); i != g1.end(); ++i, ++j) {
    out.emplace(i->first, update(i->second, j->second));
  }
  return out;
}

Context to_context(const DeclContext& i) {
  Context out;
  for (const auto& [name, t] : i) out.emplace(name, Entry::from_type(t));
  return out;
}

DeclContext to_decl_context(const Context& g) {
  DeclContext out;
  for (const auto& [name, entry] : g) {
    if (entry.first.is_void() || (entry.is_pair() && entry.second->is_void())) {
      throw AlgebraError("'" + name + "' has a void component");
    }
    out.emplace(name, used(entry));
  }
  return out;
}

}  // namespace sessionpi
