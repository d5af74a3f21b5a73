#include "patterns.hpp"

namespace sessionpi {

namespace {

using Kind = CheckError::Kind;

std::string var_subject(const std::string& x, const Type& t) { return x + " : " + t.key(); }

Context with_entry(Context g, const std::string& x, Entry e) {
  g.insert_or_assign(x, std::move(e));
  return g;
}

Context without(Context g, const std::string& x) {
  g.erase(x);
  return g;
}

class Checker {
 public:
  explicit Checker(const CheckOptions& options) : options_(options) {}

  std::vector<TraceStep> trace;
  std::vector<MatchCount> counts;

  Context process(const Context& g, const Process& p) {
    std::vector<Rule> rules = matching_rules(g, p);
    std::string subject = to_string(p);
    note_matches(subject, rules.size());
    if (rules.empty()) {
      throw CheckError(Kind::no_pattern, subject, p.pos(), no_pattern_detail(g, p));
    }
    std::size_t step = open(rules.front(), subject, g);
    Context out = apply(rules.front(), g, p);
    close(step, g, out, subject);
    return out;
  }

  Context variable(const Context& g, const std::string& x, const Type& t, SourcePos pos) {
    std::vector<Rule> rules = matching_var_rules(g, x, t);
    std::string subject = var_subject(x, t);
    note_matches(subject, rules.size());
    if (rules.empty()) {
      std::string found = g.count(x) ? to_string(g.at(x)) : "no entry";
      throw CheckError(Kind::no_pattern, subject, pos, "'" + x + "' has " + found);
    }
    std::size_t step = open(rules.front(), subject, g);
    Context out = g;
    const Entry& e = g.at(x);
    switch (rules.front()) {
      case Rule::var_lin:
        out = with_entry(g, x, Entry::single(Slot::empty()));
        break;
      case Rule::var_lin_pair_straight:
      case Rule::var_lin_pair_crossed:
        out = with_entry(g, x, Entry::pair(Slot::empty(), Slot::empty()));
        break;
      case Rule::var_lin_left:
        out = with_entry(g, x, Entry::pair(Slot::empty(), *e.second));
        break;
      case Rule::var_lin_right:
        out = with_entry(g, x, Entry::pair(e.first, Slot::empty()));
        break;
      default:
        break;
    }
    close(step, g, out, subject);
    return out;
  }

 private:
  std::size_t open(Rule rule, const std::string& subject, const Context& g) {
    if (!options_.trace) return 0;
    trace.push_back(TraceStep{rule, depth_, subject, g, {}, false});
    ++depth_;
    return trace.size() - 1;
  }

  void close(std::size_t step, const Context& in, const Context& out, const std::string& subject) {
    if (options_.audit) audit(in, out, subject);
    if (!options_.trace) return;
    --depth_;
    trace[step].output = out;
    trace[step].completed = true;
  }

  void note_matches(const std::string& subject, std::size_t n) {
    if (options_.count_matches) counts.push_back({subject, static_cast<int>(n)});
    if (options_.audit && n > 1) {
      throw AuditFailure(std::to_string(n) + " patterns match at " + subject);
    }
  }

  void audit(const Context& in, const Context& out, const std::string& subject) {
    bool same_domain = in.size() == out.size();
    for (auto i = in.begin(), j = out.begin(); same_domain && i != in.end(); ++i, ++j) {
      same_domain = i->first == j->first;
    }
    if (!same_domain) throw AuditFailure("domain changed at " + subject);
    if (!is_safe_context(out)) throw AuditFailure("unsafe output context at " + subject);
    try {
      used_map(closure(in, out));
    } catch (const AlgebraError& e) {
      throw AuditFailure("used closure undefined at " + subject + ": " + e.what());
    }
  }

  std::string no_pattern_detail(const Context& g, const Process& p) const {
    auto it = g.find(p.channel());
    if (it == g.end()) return "'" + p.channel() + "' has no entry";
    const char* action = p.kind() == Process::Kind::output ? "output" : "input";
    return "'" + p.channel() + "' : " + to_string(it->second) + " admits no " + action;
  }

  void require_un(const Entry& e, const std::string& name, const Process& p) {
    if (!is_un_entry(e)) {
      throw CheckError(Kind::linear_residual, to_string(p), p.pos(),
                       "'" + name + "' left at " + to_string(e));
    }
  }

  void require_fresh(const Context& g, const std::string& y, const Process& p) {
    if (g.count(y)) {
      throw CheckError(Kind::partial_algebra, to_string(p), p.pos(), "binder '" + y + "' already in context");
    }
  }

  // Runs the single-end-point rule on one side of a pair entry and puts the
  // untouched side back.
  Context on_side(const Context& g, const Process& p, Side side) {
    const std::string& x = p.channel();
    const Entry& e = g.at(x);
    Context inner = process(with_entry(g, x, Entry::single(e.slot(side))), p);
    Slot result = inner.at(x).first;
    Entry rewrapped = side == Side::left ? Entry::pair(result, *e.second) : Entry::pair(e.first, result);
    return with_entry(std::move(inner), x, std::move(rewrapped));
  }

  Context apply(Rule rule, const Context& g, const Process& p) {
    switch (rule) {
      case Rule::inact:
        return g;
      case Rule::par:
        return process(process(g, p.left()), p.right());
      case Rule::repl: {
        Context out = process(g, p.body());
        if (!contexts_equal(out, g)) {
          throw CheckError(Kind::no_pattern, to_string(p), p.pos(),
                           "replicated body changes the context");
        }
        return out;
      }
      case Rule::res: {
        const Type& t = p.annotation();
        if (!is_safe_type(t)) {
          throw CheckError(Kind::unsafe_annotation, to_string(p), p.pos(), "'" + t.key() + "' is not safe");
        }
        require_fresh(g, p.binder(), p);
        Context out = process(with_entry(g, p.binder(), Entry::from_type(t)), p.continuation());
        require_un(out.at(p.binder()), p.binder(), p);
        return without(std::move(out), p.binder());
      }
      case Rule::out_lin: {
        const std::string& x = p.channel();
        EndPoint s = unfold(g.at(x).first.type());
        Context g2 = variable(with_entry(g, x, Entry::single(Slot::empty())), p.argument(), s.payload(), p.pos());
        Context g3 = process(update_entry(g2, x, Side::whole, s.continuation()), p.continuation());
        require_un(g3.at(x), x, p);
        if (options_.fault == Fault::output_keeps_residual) return g3;
        return with_entry(std::move(g3), x, Entry::single(Slot::empty()));
      }
      case Rule::in_lin: {
        const std::string& x = p.channel();
        const std::string& y = p.binder();
        EndPoint s = unfold(g.at(x).first.type());
        require_fresh(g, y, p);
        Context g1 = with_entry(g, x, Entry::single(Slot::of(s.continuation())));
        Context g2 = process(with_entry(std::move(g1), y, Entry::from_type(s.payload())), p.continuation());
        require_un(g2.at(x), x, p);
        require_un(g2.at(y), y, p);
        return with_entry(without(std::move(g2), y), x, Entry::single(Slot::empty()));
      }
      case Rule::out_lin_left:
      case Rule::in_lin_left:
        return on_side(g, p, Side::left);
      case Rule::out_lin_right:
      case Rule::in_lin_right:
        return on_side(g, p, Side::right);
      case Rule::out_un:
      case Rule::out_un_left:
      case Rule::out_un_right: {
        Side side = rule == Rule::out_un ? Side::whole : rule == Rule::out_un_left ? Side::left : Side::right;
        EndPoint s = unfold(g.at(p.channel()).slot(side).type());
        Context g2 = variable(g, p.argument(), s.payload(), p.pos());
        return process(g2, p.continuation());
      }
      case Rule::in_un:
      case Rule::in_un_left:
      case Rule::in_un_right: {
        Side side = rule == Rule::in_un ? Side::whole : rule == Rule::in_un_left ? Side::left : Side::right;
        const std::string& y = p.binder();
        EndPoint s = unfold(g.at(p.channel()).slot(side).type());
        require_fresh(g, y, p);
        Context out = process(with_entry(g, y, Entry::from_type(s.payload())), p.continuation());
        require_un(out.at(y), y, p);
        return without(std::move(out), y);
      }
      default:
        break;
    }
    throw std::logic_error("variable rule dispatched on a process");
  }

  const CheckOptions& options_;
  int depth_ = 0;
};

}  // namespace

Context check_var(const Context& g, const std::string& x, const Type& t, const CheckOptions& options) {
  Checker checker(options);
  return checker.variable(g, x, t, {});
}

Context check(const Context& g, const Process& p, const CheckOptions& options) {
  Checker checker(options);
  try {
    return checker.process(g, p);
  } catch (const AlgebraError& e) {
    throw CheckError(Kind::partial_algebra, to_string(p), p.pos(), e.what());
  }
}

CheckResult type_check(const Context& g, const Process& p, const CheckOptions& options) {
  CheckResult result;
  std::set<std::string> avoid;
  for (const auto& [name, entry] : g) avoid.insert(name);
  result.checked = barendregt_rename(p, avoid);
  for (const auto& [name, entry] : g) {
    if (!is_safe_entry(entry)) {
      result.error = CheckError(Kind::unsafe_annotation, name, {}, "context entry " + to_string(entry) + " is not safe");
      return result;
    }
  }
  Checker checker(options);
  try {
    Context out = checker.process(g, result.checked);
    if (!is_un_context(out)) {
      std::string linear;
      for (const auto& [name, entry] : out) {
        if (!is_un_entry(entry)) linear += (linear.empty() ? "'" : ", '") + name + "'";
      }
      throw CheckError(Kind::non_unrestricted_result, to_string(result.checked), result.checked.pos(),
                       "linear entries left unused: " + linear);
    }
    result.accepted = true;
    result.residual = std::move(out);
  } catch (const CheckError& e) {
    result.error = e;
  } catch (const AlgebraError& e) {
    result.error = CheckError(Kind::partial_algebra, to_string(result.checked), {}, e.what());
  }
  result.trace = std::move(checker.trace);
  result.match_counts = std::move(checker.counts);
  return result;
}

std::vector<MatchCount> audit_pattern_matches(const Context& g, const Process& p) {
  CheckOptions options;
  options.audit = false;
  options.count_matches = true;
  return type_check(g, p, options).match_counts;
}

}  // namespace sessionpi
