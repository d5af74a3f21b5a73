#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sessionpi/syntax.hpp"

namespace sessionpi {

namespace {

void collect_free(const Process& p, std::set<std::string>& bound, std::set<std::string>& out) {
  auto note = [&](const std::string& name) {
    if (!bound.count(name)) out.insert(name);
  };
  auto under = [&](const std::string& binder, const Process& body) {
    bool fresh = bound.insert(binder).second;
    collect_free(body, bound, out);
    if (fresh) bound.erase(binder);
  };
  switch (p.kind()) {
    case Process::Kind::inaction:
      return;
    case Process::Kind::parallel:
      collect_free(p.left(), bound, out);
      collect_free(p.right(), bound, out);
      return;
    case Process::Kind::replication:
      collect_free(p.body(), bound, out);
      return;
    case Process::Kind::output:
      note(p.channel());
      note(p.argument());
      collect_free(p.continuation(), bound, out);
      return;
    case Process::Kind::input:
      note(p.channel());
      under(p.binder(), p.continuation());
      return;
    case Process::Kind::restriction:
      under(p.binder(), p.continuation());
      return;
  }
}

void collect_names(const Process& p, std::set<std::string>& out) {
  switch (p.kind()) {
    case Process::Kind::inaction:
      return;
    case Process::Kind::parallel:
      collect_names(p.left(), out);
      collect_names(p.right(), out);
      return;
    case Process::Kind::replication:
      collect_names(p.body(), out);
      return;
    case Process::Kind::output:
      out.insert(p.channel());
      out.insert(p.argument());
      collect_names(p.continuation(), out);
      return;
    case Process::Kind::input:
      out.insert(p.channel());
      out.insert(p.binder());
      collect_names(p.continuation(), out);
      return;
    case Process::Kind::restriction:
      out.insert(p.binder());
      collect_names(p.continuation(), out);
      return;
  }
}

class Renamer {
 public:
  explicit Renamer(std::set<std::string> used) : used_(std::move(used)) {}

  Process run(const Process& p) { return rename(p); }

 private:
  std::string lookup(const std::string& name) const {
    auto it = env_.find(name);
    return it == env_.end() || it->second.empty() ? name : it->second.back();
  }

  std::string choose(const std::string& binder) {
    std::string pick = binder;
    for (int k = 1; used_.count(pick); ++k) pick = binder + std::to_string(k);
    used_.insert(pick);
    return pick;
  }

  Process under(const std::string& binder, const std::string& fresh, const Process& body) {
    env_[binder].push_back(fresh);
    Process out = rename(body);
    env_[binder].pop_back();
    return out;
  }

  Process rename(const Process& p) {
    switch (p.kind()) {
      case Process::Kind::inaction:
        return p;
      case Process::Kind::parallel: {
        Process l = rename(p.left());
        Process r = rename(p.right());
        return Process::par(std::move(l), std::move(r), p.pos());
      }
      case Process::Kind::replication:
        return Process::repl(rename(p.body()), p.pos());
      case Process::Kind::output:
        return Process::output(lookup(p.channel()), lookup(p.argument()),
                               rename(p.continuation()), p.pos());
      case Process::Kind::input: {
        std::string channel = lookup(p.channel());
        std::string fresh = choose(p.binder());
        return Process::input(std::move(channel), fresh, under(p.binder(), fresh, p.continuation()),
                              p.pos());
      }
      case Process::Kind::restriction: {
        std::string fresh = choose(p.binder());
        return Process::restrict(fresh, p.annotation(), under(p.binder(), fresh, p.continuation()),
                                 p.pos());
      }
    }
    return p;
  }

  std::set<std::string> used_;
  std::map<std::string, std::vector<std::string>> env_;
};

bool alpha_equal_impl(const Process& a, const Process& b, std::map<std::string, int>& env_a,
                      std::map<std::string, int>& env_b, int depth) {
  auto same_name = [&](const std::string& x, const std::string& y) {
    auto ia = env_a.find(x);
    auto ib = env_b.find(y);
    if (ia == env_a.end() || ib == env_b.end()) return ia == env_a.end() && ib == env_b.end() && x == y;
    return ia->second == ib->second;
  };
  auto under = [&](const std::string& x, const std::string& y, const Process& pa,
                   const Process& pb) {
    auto saved_a = env_a.find(x) == env_a.end() ? std::optional<int>{} : env_a[x];
    auto saved_b = env_b.find(y) == env_b.end() ? std::optional<int>{} : env_b[y];
    env_a[x] = depth;
    env_b[y] = depth;
    bool result = alpha_equal_impl(pa, pb, env_a, env_b, depth + 1);
    if (saved_a) env_a[x] = *saved_a; else env_a.erase(x);
    if (saved_b) env_b[y] = *saved_b; else env_b.erase(y);
    return result;
  };
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Process::Kind::inaction:
      return true;
    case Process::Kind::parallel:
      return alpha_equal_impl(a.left(), b.left(), env_a, env_b, depth) &&
             alpha_equal_impl(a.right(), b.right(), env_a, env_b, depth);
    case Process::Kind::replication:
      return alpha_equal_impl(a.body(), b.body(), env_a, env_b, depth);
    case Process::Kind::output:
      return same_name(a.channel(), b.channel()) && same_name(a.argument(), b.argument()) &&
             alpha_equal_impl(a.continuation(), b.continuation(), env_a, env_b, depth);
    case Process::Kind::input:
      return same_name(a.channel(), b.channel()) &&
             under(a.binder(), b.binder(), a.continuation(), b.continuation());
    case Process::Kind::restriction:
      return a.annotation() == b.annotation() &&
             under(a.binder(), b.binder(), a.continuation(), b.continuation());
  }
  return false;
}

void collect_binders(const Process& p, std::vector<std::string>& out) {
  switch (p.kind()) {
    case Process::Kind::inaction:
      return;
    case Process::Kind::parallel:
      collect_binders(p.left(), out);
      collect_binders(p.right(), out);
      return;
    case Process::Kind::replication:
      collect_binders(p.body(), out);
      return;
    case Process::Kind::output:
      collect_binders(p.continuation(), out);
      return;
    case Process::Kind::input:
    case Process::Kind::restriction:
      out.push_back(p.binder());
      collect_binders(p.continuation(), out);
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Process& p) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(p, bound, out);
  return out;
}

std::set<std::string> all_names(const Process& p) {
  std::set<std::string> out;
  collect_names(p, out);
  return out;
}

Process substitute(const Process& p, const std::string& replacement, const std::string& target) {
  if (replacement == target) return p;
  auto swap = [&](const std::string& name) { return name == target ? replacement : name; };
  switch (p.kind()) {
    case Process::Kind::inaction:
      return p;
    case Process::Kind::parallel:
      return Process::par(substitute(p.left(), replacement, target),
                          substitute(p.right(), replacement, target), p.pos());
    case Process::Kind::replication:
      return Process::repl(substitute(p.body(), replacement, target), p.pos());
    case Process::Kind::output:
      return Process::output(swap(p.channel()), swap(p.argument()),
                             substitute(p.continuation(), replacement, target), p.pos());
    case Process::Kind::input:
    case Process::Kind::restriction: {
      const Process& body = p.continuation();
      Process new_body = body;
      if (p.binder() != target) {
        if (p.binder() == replacement && free_vars(body).count(target)) {
          throw std::logic_error("substitution {" + replacement + "/" + target +
                                 "} captured by binder in " + to_string(p));
        }
        new_body = substitute(body, replacement, target);
      }
      if (p.kind() == Process::Kind::input) {
        return Process::input(swap(p.channel()), p.binder(), std::move(new_body), p.pos());
      }
      return Process::restrict(p.binder(), p.annotation(), std::move(new_body), p.pos());
    }
  }
  return p;
}

Process barendregt_rename(const Process& p, const std::set<std::string>& avoid) {
  std::set<std::string> used = free_vars(p);
  used.insert(avoid.begin(), avoid.end());
  return Renamer(std::move(used)).run(p);
}

Process fresh_copy(const Process& p, const std::set<std::string>& avoid) {
  std::set<std::string> used = all_names(p);
  used.insert(avoid.begin(), avoid.end());
  // Binders all clash with `used`, so each one receives a new suffix.
  return Renamer(std::move(used)).run(p);
}

bool alpha_equal(const Process& a, const Process& b) {
  std::map<std::string, int> env_a;
  std::map<std::string, int> env_b;
  return alpha_equal_impl(a, b, env_a, env_b, 0);
}

bool satisfies_variable_convention(const Process& p) {
  std::vector<std::string> binders;
  collect_binders(p, binders);
  std::set<std::string> seen = free_vars(p);
  for (const auto& b : binders) {
    if (!seen.insert(b).second) return false;
  }
  return true;
}

}  // namespace sessionpi
