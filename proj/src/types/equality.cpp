#include <map>
#include <set>
#include <utility>

#include "sessionpi/types.hpp"

namespace sessionpi {

EndPoint substitute_type(const EndPoint& s, const std::string& var, const EndPoint& replacement) {
  switch (s.kind()) {
    case EndPoint::Kind::variable:
      return s.name() == var ? replacement : s;
    case EndPoint::Kind::recursive: {
      if (s.name() == var) return s;
      EndPoint body = substitute_type(s.body(), var, replacement);
      if (body.same_node(s.body())) return s;
      return EndPoint::recursive(s.name(), std::move(body));
    }
    case EndPoint::Kind::qualified: {
      if (s.polarity() == Polarity::end) return s;
      Type payload = substitute_type(s.payload(), var, replacement);
      EndPoint cont = substitute_type(s.continuation(), var, replacement);
      bool unchanged = payload.first.same_node(s.payload().first) &&
                       (!payload.is_channel() || payload.second == s.payload().second) &&
                       cont.same_node(s.continuation());
      if (unchanged) return s;
      return EndPoint::qualified(s.qualifier(), s.polarity(), std::move(payload), std::move(cont));
    }
  }
  return s;
}

Type substitute_type(const Type& t, const std::string& var, const EndPoint& replacement) {
  EndPoint first = substitute_type(t.first, var, replacement);
  if (!t.is_channel()) return Type::end_point(std::move(first));
  EndPoint second = substitute_type(t.right(), var, replacement);
  if (first.same_node(t.first) && second.same_node(t.right())) return t;
  return Type::channel(std::move(first), std::move(second));
}

EndPoint unfold(const EndPoint& s) {
  EndPoint cur = s;
  while (cur.kind() == EndPoint::Kind::recursive) {
    cur = substitute_type(cur.body(), cur.name(), cur);
  }
  return cur;
}

namespace {

using Assumptions = std::set<std::pair<std::string, std::string>>;

bool equal_end_points(const EndPoint& a, const EndPoint& b, Assumptions& assumed);

bool equal_types(const Type& a, const Type& b, Assumptions& assumed) {
  if (a.is_channel() != b.is_channel()) return false;
  if (!a.is_channel()) return equal_end_points(a.first, b.first, assumed);
  Assumptions snapshot = assumed;
  if (equal_end_points(a.left(), b.left(), assumed) &&
      equal_end_points(a.right(), b.right(), assumed)) {
    return true;
  }
  assumed = std::move(snapshot);
  return equal_end_points(a.left(), b.right(), assumed) &&
         equal_end_points(a.right(), b.left(), assumed);
}

bool equal_end_points(const EndPoint& a, const EndPoint& b, Assumptions& assumed) {
  if (a.key() == b.key()) return true;
  if (!assumed.emplace(a.key(), b.key()).second) return true;
  EndPoint x = unfold(a);
  EndPoint y = unfold(b);
  if (x.kind() == EndPoint::Kind::variable || y.kind() == EndPoint::Kind::variable) {
    return x.key() == y.key();
  }
  if (x.qualifier() != y.qualifier() || x.polarity() != y.polarity()) return false;
  if (x.polarity() == Polarity::end) return true;
  return equal_types(x.payload(), y.payload(), assumed) &&
         equal_end_points(x.continuation(), y.continuation(), assumed);
}

EndPoint close_over(const EndPoint& s, const std::map<std::string, EndPoint>& env) {
  EndPoint out = s;
  for (const auto& [name, closed] : env) out = substitute_type(out, name, closed);
  return out;
}

Type close_over(const Type& t, const std::map<std::string, EndPoint>& env) {
  if (!t.is_channel()) return Type::end_point(close_over(t.first, env));
  return Type::channel(close_over(t.left(), env), close_over(t.right(), env));
}

// Payloads are copied, not dualised; any recursion variable inside a payload
// is closed with the original (undualised) recursive type it refers to.
EndPoint dual_impl(const EndPoint& s, std::map<std::string, EndPoint>& env) {
  switch (s.kind()) {
    case EndPoint::Kind::variable:
      return s;
    case EndPoint::Kind::recursive: {
      EndPoint closed = close_over(s, env);
      auto saved = env.find(s.name()) == env.end() ? std::optional<EndPoint>{} : env.at(s.name());
      env.insert_or_assign(s.name(), closed);
      EndPoint body = dual_impl(s.body(), env);
      if (saved) env.insert_or_assign(s.name(), *saved); else env.erase(s.name());
      return EndPoint::recursive(s.name(), std::move(body));
    }
    case EndPoint::Kind::qualified: {
      if (s.polarity() == Polarity::end) return s;
      Polarity flipped = s.polarity() == Polarity::send ? Polarity::receive : Polarity::send;
      return EndPoint::qualified(s.qualifier(), flipped, close_over(s.payload(), env),
                                 dual_impl(s.continuation(), env));
    }
  }
  return s;
}

}  // namespace

bool type_equal(const EndPoint& a, const EndPoint& b) {
  Assumptions assumed;
  return equal_end_points(a, b, assumed);
}

bool type_equal(const Type& a, const Type& b) {
  Assumptions assumed;
  return equal_types(a, b, assumed);
}

EndPoint dual(const EndPoint& s) {
  std::map<std::string, EndPoint> env;
  return dual_impl(s, env);
}

std::vector<EndPoint> descendants(const EndPoint& s) {
  std::vector<EndPoint> found{s};
  for (std::size_t i = 0; i < found.size(); ++i) {
    EndPoint u = unfold(found[i]);
    if (u.kind() != EndPoint::Kind::qualified || u.polarity() == Polarity::end) continue;
    const EndPoint& next = u.continuation();
    bool seen = false;
    for (const auto& f : found) {
      if (type_equal(f, next)) {
        seen = true;
        break;
      }
    }
    if (!seen) found.push_back(next);
  }
  return found;
}

}  // namespace sessionpi
