#include <array>
#include <unordered_map>

#include "sessionpi/declarative.hpp"

namespace sessionpi {

namespace {

Verdict any_of(Verdict a, Verdict b) {
  if (a == Verdict::derivable || b == Verdict::derivable) return Verdict::derivable;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::not_derivable;
}

Verdict both_of(Verdict a, Verdict b) {
  if (a == Verdict::not_derivable || b == Verdict::not_derivable) return Verdict::not_derivable;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::derivable;
}

DeclContext with(DeclContext i, const std::string& x, Type t) {
  i.insert_or_assign(x, std::move(t));
  return i;
}

// A prefix acting on end point s, viewed as q ?T.S or q !T.S. Unrestricted
// prefixes must leave the type unchanged.
std::optional<EndPoint> acting(const EndPoint& s, Polarity pol) {
  EndPoint u = unfold(s);
  if (u.polarity() != pol) return std::nullopt;
  if (u.qualifier() == Qualifier::un && !type_equal(u.continuation(), s)) return std::nullopt;
  return u;
}

// Types of x after the prefix of polarity pol, with the payload type: one
// reading per component that can act.
std::vector<std::pair<Type, Type>> after_prefix(const Type& t, Polarity pol) {
  std::vector<std::pair<Type, Type>> out;
  if (!t.is_channel()) {
    if (auto u = acting(t.first, pol)) out.emplace_back(Type::end_point(u->continuation()), u->payload());
    return out;
  }
  if (auto u = acting(t.left(), pol)) out.emplace_back(Type::channel(u->continuation(), t.right()), u->payload());
  if (auto u = acting(t.right(), pol)) out.emplace_back(Type::channel(t.left(), u->continuation()), u->payload());
  return out;
}

class Search {
 public:
  explicit Search(const OracleOptions& options) : options_(options) {}

  std::int64_t nodes = 0;
  bool exceeded = false;

  Verdict derive(const DeclContext& i, const Process& p, int depth) {
    if (depth > options_.bound || nodes >= options_.node_budget) {
      exceeded = true;
      return Verdict::inconclusive;
    }
    ++nodes;
    std::string key = to_string(i);
    key += '\x1f';
    key += std::to_string(reinterpret_cast<std::uintptr_t>(p.identity()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Verdict v = rules(i, p, depth);
    if (v != Verdict::inconclusive) memo_.emplace(std::move(key), v);
    return v;
  }

 private:
  Verdict rules(const DeclContext& i, const Process& p, int depth) {
    switch (p.kind()) {
      case Process::Kind::inaction:
        return is_un_decl_context(i) ? Verdict::derivable : Verdict::not_derivable;
      case Process::Kind::replication:
        if (!is_un_decl_context(i)) return Verdict::not_derivable;
        return derive(i, p.body(), depth + 1);
      case Process::Kind::parallel: {
        Verdict v = Verdict::not_derivable;
        for (const Split& s : enumerate_splits(i, free_vars(p.left()), free_vars(p.right()))) {
          Verdict left = derive(s.left, p.left(), depth + 1);
          if (left == Verdict::not_derivable) continue;
          v = any_of(v, both_of(left, derive(s.right, p.right(), depth + 1)));
          if (v == Verdict::derivable) break;
        }
        return v;
      }
      case Process::Kind::restriction: {
        std::vector<Type> annotations{p.annotation()};
        if (options_.reannotate_restrictions) annotations = evolved_types(p.annotation());
        Verdict v = Verdict::not_derivable;
        for (const Type& t : annotations) {
          if (!is_safe_type(t)) continue;
          v = any_of(v, derive(with(i, p.binder(), t), p.continuation(), depth + 1));
          if (v == Verdict::derivable) break;
        }
        return v;
      }
      case Process::Kind::input: {
        auto it = i.find(p.channel());
        if (it == i.end() || i.count(p.binder())) return Verdict::not_derivable;
        Verdict v = Verdict::not_derivable;
        for (const auto& [next, payload] : after_prefix(it->second, Polarity::receive)) {
          DeclContext body = with(with(i, p.channel(), next), p.binder(), payload);
          v = any_of(v, derive(body, p.continuation(), depth + 1));
          if (v == Verdict::derivable) break;
        }
        return v;
      }
      case Process::Kind::output: {
        std::set<std::string> rest = free_vars(p.continuation());
        rest.insert(p.channel());
        Verdict v = Verdict::not_derivable;
        for (const Split& s : enumerate_splits(i, {p.argument()}, rest)) {
          auto it = s.right.find(p.channel());
          if (it == s.right.end()) continue;
          for (const auto& [next, payload] : after_prefix(it->second, Polarity::send)) {
            if (!derivable_value(s.left, p.argument(), payload)) continue;
            v = any_of(v, derive(with(s.right, p.channel(), next), p.continuation(), depth + 1));
            if (v == Verdict::derivable) return v;
          }
        }
        return v;
      }
    }
    return Verdict::not_derivable;
  }

  const OracleOptions& options_;
  std::unordered_map<std::string, Verdict> memo_;
};

constexpr std::array<std::pair<Verdict, const char*>, 3> kVerdictNames{{
    {Verdict::derivable, "derivable"},
    {Verdict::not_derivable, "not_derivable"},
    {Verdict::inconclusive, "inconclusive"},
}};

}  // namespace

std::string verdict_name(Verdict v) {
  for (const auto& [verdict, name] : kVerdictNames) {
    if (verdict == v) return name;
  }
  return "?";
}

std::optional<Verdict> verdict_from_name(const std::string& name) {
  for (const auto& [verdict, n] : kVerdictNames) {
    if (name == n) return verdict;
  }
  return std::nullopt;
}

OracleResult derivable(const DeclContext& i, const Process& p, const OracleOptions& options) {
  std::set<std::string> avoid;
  for (const auto& [x, t] : i) avoid.insert(x);
  Process renamed = barendregt_rename(p, avoid);
  Search search(options);
  OracleResult result;
  result.verdict = search.derive(i, renamed, 1);
  result.nodes = search.nodes;
  result.bound_exceeded = search.exceeded;
  return result;
}

std::vector<Type> evolved_types(const Type& t) {
  std::vector<Type> out{t};
  auto add = [&out](Type candidate) {
    for (const Type& seen : out) {
      if (type_equal(seen, candidate)) return;
    }
    out.push_back(std::move(candidate));
  };
  if (!t.is_channel()) {
    for (const EndPoint& s : descendants(t.first)) add(Type::end_point(s));
  } else {
    std::vector<EndPoint> lefts = descendants(t.left());
    std::vector<EndPoint> rights = descendants(t.right());
    for (const EndPoint& a : lefts) {
      for (const EndPoint& b : rights) {
        Type pair = Type::channel(a, b);
        if (is_safe_type(pair)) add(std::move(pair));
      }
    }
  }
  add(Type::end_point(EndPoint::end(Qualifier::un)));
  return out;
}

}  // namespace sessionpi
