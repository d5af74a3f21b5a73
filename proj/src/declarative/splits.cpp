#include <functional>

#include "sessionpi/declarative.hpp"

namespace sessionpi {

namespace {

bool is_un_end_point(const EndPoint& s) { return unfold(s).qualifier() == Qualifier::un; }

// Ways of distributing one binding: the part sent left and the part sent right.
struct Placement {
  std::optional<Type> left;
  std::optional<Type> right;
};

std::vector<Placement> placements(const Type& t, bool to_left, bool to_right) {
  if (is_un_type(t)) return {{t, t}};
  std::vector<Placement> out;
  if (!t.is_channel() || (!is_un_end_point(t.left()) && !is_un_end_point(t.right()))) {
    if (to_left) out.push_back({t, std::nullopt});
    if (to_right) out.push_back({std::nullopt, t});
    if (t.is_channel() && to_left && to_right) {
      Type a = Type::end_point(t.left());
      Type b = Type::end_point(t.right());
      out.push_back({a, b});
      if (!type_equal(a, b)) out.push_back({b, a});
    }
    return out;
  }
  // One linear and one unrestricted component: the pair goes to one side and
  // a copy of the unrestricted component to the other.
  Type shared = Type::end_point(is_un_end_point(t.left()) ? t.left() : t.right());
  if (to_left) out.push_back({t, shared});
  if (to_right) out.push_back({shared, t});
  return out;
}

}  // namespace

std::vector<Split> enumerate_splits(const DeclContext& i, const std::set<std::string>& left_names,
                                    const std::set<std::string>& right_names) {
  std::vector<std::pair<const std::string*, std::vector<Placement>>> choices;
  for (const auto& [x, t] : i) {
    auto options = placements(t, left_names.count(x) > 0, right_names.count(x) > 0);
    if (options.empty()) return {};
    choices.emplace_back(&x, std::move(options));
  }
  std::vector<Split> out;
  Split current{{}, {}, i};
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == choices.size()) {
      out.push_back(current);
      return;
    }
    const std::string& x = *choices[k].first;
    for (const auto& option : choices[k].second) {
      if (option.left) current.left.insert_or_assign(x, *option.left);
      if (option.right) current.right.insert_or_assign(x, *option.right);
      place(k + 1);
      current.left.erase(x);
      current.right.erase(x);
    }
  };
  place(0);
  return out;
}

std::vector<Split> enumerate_splits(const DeclContext& i) {
  std::set<std::string> names;
  for (const auto& [x, t] : i) names.insert(x);
  return enumerate_splits(i, names, names);
}

bool derivable_value(const DeclContext& i, const std::string& v, const Type& t) {
  auto it = i.find(v);
  if (it == i.end()) return false;
  for (const auto& [x, u] : i) {
    if (x != v && !is_un_type(u)) return false;
  }
  const Type& held = it->second;
  if (type_equal(held, t)) return true;
  if (t.is_channel() || !held.is_channel()) return false;
  return (type_equal(held.left(), t.first) && is_un_end_point(held.right())) ||
         (type_equal(held.right(), t.first) && is_un_end_point(held.left()));
}

}  // namespace sessionpi
