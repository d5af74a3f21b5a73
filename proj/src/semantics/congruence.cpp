#include <array>

#include "sessionpi/semantics.hpp"
#include "sessionpi/types.hpp"

namespace sessionpi {

namespace {

constexpr std::array<std::pair<CongruenceRule, const char*>, 8> kRuleNames{{
    {CongruenceRule::par_commute, "par-commute"},
    {CongruenceRule::par_assoc, "par-assoc"},
    {CongruenceRule::par_unit, "par-unit"},
    {CongruenceRule::repl_unfold, "repl-unfold"},
    {CongruenceRule::scope_extrusion, "scope-extrusion"},
    {CongruenceRule::res_swap, "res-swap"},
    {CongruenceRule::gc_un, "gc-un"},
    {CongruenceRule::gc_un_pair, "gc-un-pair"},
}};

constexpr std::array<std::pair<CongruenceRule, Direction>, 12> kApplications{{
    {CongruenceRule::par_commute, Direction::forward},
    {CongruenceRule::par_assoc, Direction::forward},
    {CongruenceRule::par_assoc, Direction::backward},
    {CongruenceRule::par_unit, Direction::forward},
    {CongruenceRule::par_unit, Direction::backward},
    {CongruenceRule::repl_unfold, Direction::forward},
    {CongruenceRule::repl_unfold, Direction::backward},
    {CongruenceRule::scope_extrusion, Direction::forward},
    {CongruenceRule::scope_extrusion, Direction::backward},
    {CongruenceRule::res_swap, Direction::forward},
    {CongruenceRule::gc_un, Direction::forward},
    {CongruenceRule::gc_un_pair, Direction::forward},
}};

using K = Process::Kind;

bool is(const Process& p, K kind) { return p.kind() == kind; }

bool un_end_point(const EndPoint& s) { return unfold(s).qualifier() == Qualifier::un; }

std::vector<Process> children(const Process& p) {
  switch (p.kind()) {
    case K::inaction:
      return {};
    case K::parallel:
      return {p.left(), p.right()};
    case K::replication:
      return {p.body()};
    default:
      return {p.continuation()};
  }
}

Process with_child(const Process& p, int index, Process child) {
  switch (p.kind()) {
    case K::parallel:
      return index == 0 ? Process::par(std::move(child), p.right(), p.pos())
                        : Process::par(p.left(), std::move(child), p.pos());
    case K::replication:
      return Process::repl(std::move(child), p.pos());
    case K::output:
      return Process::output(p.channel(), p.argument(), std::move(child), p.pos());
    case K::input:
      return Process::input(p.channel(), p.binder(), std::move(child), p.pos());
    case K::restriction:
      return Process::restrict(p.binder(), p.annotation(), std::move(child), p.pos());
    case K::inaction:
      break;
  }
  throw std::logic_error("inaction has no children");
}

std::optional<Process> at_root(const Process& p, CongruenceRule rule, Direction d, const std::set<std::string>& avoid) {
  bool fwd = d == Direction::forward;
  switch (rule) {
    case CongruenceRule::par_commute:
      if (is(p, K::parallel)) return Process::par(p.right(), p.left(), p.pos());
      break;
    case CongruenceRule::par_assoc:
      if (fwd && is(p, K::parallel) && is(p.left(), K::parallel)) {
        return Process::par(p.left().left(), Process::par(p.left().right(), p.right()), p.pos());
      }
      if (!fwd && is(p, K::parallel) && is(p.right(), K::parallel)) {
        return Process::par(Process::par(p.left(), p.right().left()), p.right().right(), p.pos());
      }
      break;
    case CongruenceRule::par_unit:
      if (fwd && is(p, K::parallel) && is(p.right(), K::inaction)) return p.left();
      if (!fwd) return Process::par(p, Process::zero());
      break;
    case CongruenceRule::repl_unfold:
      if (fwd && is(p, K::replication)) return Process::par(fresh_copy(p.body(), avoid), p, p.pos());
      if (!fwd && is(p, K::parallel) && is(p.right(), K::replication) && alpha_equal(p.left(), p.right().body())) {
        return p.right();
      }
      break;
    case CongruenceRule::scope_extrusion:
      if (fwd && is(p, K::parallel) && is(p.left(), K::restriction) &&
          !free_vars(p.right()).count(p.left().binder())) {
        const Process& r = p.left();
        return Process::restrict(r.binder(), r.annotation(), Process::par(r.continuation(), p.right()), r.pos());
      }
      if (!fwd && is(p, K::restriction) && is(p.continuation(), K::parallel) &&
          !free_vars(p.continuation().right()).count(p.binder())) {
        const Process& body = p.continuation();
        return Process::par(Process::restrict(p.binder(), p.annotation(), body.left(), p.pos()), body.right());
      }
      break;
    case CongruenceRule::res_swap:
      if (is(p, K::restriction) && is(p.continuation(), K::restriction)) {
        const Process& inner = p.continuation();
        return Process::restrict(inner.binder(), inner.annotation(),
                                 Process::restrict(p.binder(), p.annotation(), inner.continuation(), p.pos()),
                                 inner.pos());
      }
      break;
    case CongruenceRule::gc_un:
      if (fwd && is(p, K::restriction) && is(p.continuation(), K::inaction) && !p.annotation().is_channel() &&
          un_end_point(p.annotation().first)) {
        return p.continuation();
      }
      break;
    case CongruenceRule::gc_un_pair:
      if (fwd && is(p, K::restriction) && is(p.continuation(), K::inaction) && p.annotation().is_channel() &&
          un_end_point(p.annotation().left()) && un_end_point(p.annotation().right())) {
        return p.continuation();
      }
      break;
  }
  return std::nullopt;
}

std::optional<Process> rewrite(const Process& p, const Path& path, std::size_t k, CongruenceRule rule, Direction d,
                               const std::set<std::string>& avoid) {
  if (k == path.size()) return at_root(p, rule, d, avoid);
  std::vector<Process> kids = children(p);
  int index = path[k];
  if (index < 0 || index >= static_cast<int>(kids.size())) return std::nullopt;
  auto inner = rewrite(kids[index], path, k + 1, rule, d, avoid);
  if (!inner) return std::nullopt;
  return with_child(p, index, std::move(*inner));
}

Process replace_at(const Process& p, const Path& path, std::size_t k, Process replacement) {
  if (k == path.size()) return replacement;
  return with_child(p, path[k], replace_at(children(p)[path[k]], path, k + 1, std::move(replacement)));
}

void collect(const Process& root, const Process& p, Path& path, const std::set<std::string>& avoid,
             std::vector<RewriteStep>& out) {
  for (const auto& [rule, d] : kApplications) {
    if (auto local = at_root(p, rule, d, avoid)) {
      out.push_back(RewriteStep{rule, d, path, replace_at(root, path, 0, std::move(*local))});
    }
  }
  std::vector<Process> kids = children(p);
  for (int i = 0; i < static_cast<int>(kids.size()); ++i) {
    path.push_back(i);
    collect(root, kids[i], path, avoid, out);
    path.pop_back();
  }
}

}  // namespace

std::string rule_name(CongruenceRule rule) {
  for (const auto& [r, name] : kRuleNames) {
    if (r == rule) return name;
  }
  return "?";
}

std::optional<CongruenceRule> congruence_rule_from_name(const std::string& name) {
  for (const auto& [r, n] : kRuleNames) {
    if (name == n) return r;
  }
  return std::nullopt;
}

std::string direction_name(Direction d) { return d == Direction::forward ? "forward" : "backward"; }

std::string to_string(const Path& path) {
  if (path.empty()) return "root";
  std::string out;
  for (int i : path) {
    if (!out.empty()) out += '.';
    out += std::to_string(i);
  }
  return out;
}

std::optional<Process> subterm(const Process& p, const Path& path) {
  Process current = p;
  for (int index : path) {
    std::vector<Process> kids = children(current);
    if (index < 0 || index >= static_cast<int>(kids.size())) return std::nullopt;
    current = kids[index];
  }
  return current;
}

std::vector<RewriteStep> congruence_steps(const Process& p) {
  std::vector<RewriteStep> out;
  Path path;
  collect(p, p, path, all_names(p), out);
  return out;
}

std::optional<Process> apply_rewrite(const Process& p, CongruenceRule rule, Direction direction, const Path& position) {
  return rewrite(p, position, 0, rule, direction, all_names(p));
}

Direction inverse_direction(CongruenceRule rule, Direction direction) {
  if (rule == CongruenceRule::par_commute || rule == CongruenceRule::res_swap) return direction;
  return direction == Direction::forward ? Direction::backward : Direction::forward;
}

}  // namespace sessionpi
