// Acceptance suite: one PASS/FAIL line per criterion, each with its pinned
// time limit. Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sessionpi/checker.hpp"
#include "sessionpi/commands.hpp"
#include "sessionpi/declarative.hpp"
#include "sessionpi/semantics.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace sessionpi {
namespace {

namespace t = testing;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  /// Wall-clock limit in seconds; zero when only the verdicts are pinned.
  double limit_s;
  std::function<Outcome()> run;
};

int audit_failures = 0;

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::string describe(const Context& g, const Process& p) { return to_string(g) + " |- " + to_string(p); }

// Every type_check in the suite goes through here so that audit failures are
// counted wherever they occur.
CheckResult checked(const Context& g, const Process& p) {
  try {
    return type_check(g, p);
  } catch (const AuditFailure&) {
    ++audit_failures;
    throw;
  }
}

Outcome protocol_both_orders() {
  Outcome o;
  t::Fixture f = t::fixture("protocol");
  Process p = f.process();
  if (p.kind() != Process::Kind::parallel) {
    fail(o, "protocol fixture is not a parallel composition");
    return o;
  }
  Process swapped = Process::par(p.right(), p.left());
  for (const Process& q : {p, swapped, t::fixture("protocol-swapped").process()}) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r = checked(f.context(), q);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!r.accepted) fail(o, "rejected: " + to_string(q));
    if (r.residual && !is_un_context(*r.residual)) fail(o, "residual is not unrestricted");
    if (secs >= 1.0) fail(o, "single check took " + std::to_string(secs) + " s");
  }
  if (o.pass) o.detail = "both orders accepted with unrestricted residual";
  return o;
}

Outcome remark_pair() {
  Outcome o;
  t::Fixture misuse = t::fixture("remark-misuse");
  CheckResult bad = checked(misuse.context(), misuse.process());
  if (bad.accepted || !bad.error) {
    fail(o, "misuse accepted");
  } else {
    if (bad.error->kind() != CheckError::Kind::no_pattern) fail(o, "misuse error is " + kind_name(bad.error->kind()));
    if (bad.error->subject() != "x?(y).0") fail(o, "misuse rejected at " + bad.error->subject());
  }
  t::Fixture shared = t::fixture("remark-shared");
  if (!checked(shared.context(), shared.process()).accepted) fail(o, "shared-channel process rejected");
  if (o.pass) o.detail = "misuse: NoPattern at x?(y).0; shared: accepted";
  return o;
}

Outcome pattern_uniqueness() {
  Outcome o;
  t::Rng rng(3001);
  int pairs = 0;
  long calls = 0;
  int violations = 0;
  for (int i = 0; i < 1200; ++i) {
    t::TypedInstance inst = i % 2 ? t::random_safe_instance(rng, t::uniform(rng, 2, 14))
                                  : t::random_protocol_instance(rng, t::uniform(rng, 1, 3), t::uniform(rng, 1, 4),
                                                                i % 4 == 0);
    if (!is_safe_context(inst.context)) continue;
    ++pairs;
    for (const auto& c : audit_pattern_matches(inst.context, inst.process)) {
      ++calls;
      if (c.matches > 1) {
        if (violations == 0) fail(o, std::to_string(c.matches) + " patterns match " + c.subject);
        ++violations;
      }
    }
  }
  if (pairs < 1000) fail(o, "only " + std::to_string(pairs) + " safe pairs");
  if (o.pass) {
    o.detail = std::to_string(pairs) + " safe pairs, " + std::to_string(calls) + " calls, 0 violations";
  }
  return o;
}

Outcome soundness_differential() {
  Outcome o;
  std::vector<Type> universe = t::type_universe();
  std::vector<std::string> names{"x", "y"};
  std::vector<Process> processes = t::enumerate_processes(5, names, universe);
  std::vector<Context> contexts = t::enumerate_contexts(names, universe);
  long pairs = 0;
  long accepted = 0;
  long failures = 0;
  auto verify = [&](const Context& g, const Process& p) {
    CheckResult r = checked(g, p);
    if (!r.accepted) return;
    ++accepted;
    Context out = check(g, r.checked);
    for (const DeclContext& i : {used_map(closure(g, out)), used_map(g)}) {
      OracleResult d = derivable(i, r.checked);
      if (d.verdict != Verdict::derivable) {
        if (failures == 0) fail(o, verdict_name(d.verdict) + ": " + describe(g, r.checked));
        ++failures;
      }
    }
  };
  for (const Context& g : contexts) {
    for (const Process& p : processes) {
      ++pairs;
      verify(g, p);
    }
  }
  long exhaustive_accepted = accepted;
  t::Rng rng(4004);
  int random = 0;
  for (; random < 1000; ++random) {
    t::TypedInstance inst = random % 2 ? t::random_safe_instance(rng, t::uniform(rng, 6, 14))
                                       : t::random_protocol_instance(rng, t::uniform(rng, 1, 3),
                                                                     t::uniform(rng, 1, 4), random % 6 == 0);
    verify(inst.context, inst.process);
  }
  long random_accepted = accepted - exhaustive_accepted;
  if (random_accepted < 200) fail(o, "only " + std::to_string(random_accepted) + " random instances accepted");
  if (o.pass) {
    std::ostringstream s;
    s << processes.size() << " processes x " << contexts.size() << " contexts = " << pairs << " pairs ("
      << exhaustive_accepted << " accepted), " << random << " random (" << random_accepted
      << " accepted); all accepted derivable";
    o.detail = s.str();
  }
  return o;
}

Outcome incompleteness_witnesses() {
  Outcome o;
  for (const char* name : {"witness-input", "witness-recursive"}) {
    t::Fixture f = t::fixture(name);
    OracleResult d = derivable(to_decl_context(f.context()), f.process());
    if (d.verdict != Verdict::derivable) fail(o, std::string(name) + " oracle: " + verdict_name(d.verdict));
    if (checked(f.context(), f.process()).accepted) fail(o, std::string(name) + " accepted");
  }
  if (o.pass) o.detail = "both witnesses derivable and rejected";
  return o;
}

Outcome congruence_preservation() {
  Outcome o;
  int pairs = 0;
  int divergences = 0;
  auto compare = [&](const Context& g, const Process& p) {
    CheckResult before = checked(g, p);
    for (const RewriteStep& s : congruence_steps(p)) {
      ++pairs;
      CheckResult after = checked(g, s.result);
      bool same = before.accepted == after.accepted;
      if (same && before.accepted) same = contexts_equal(*before.residual, *after.residual);
      if (!same) {
        if (divergences == 0) {
          fail(o, rule_name(s.rule) + " " + direction_name(s.direction) + " at " + to_string(s.position) + ": " +
                      to_string(p) + " ~> " + to_string(s.result));
        }
        ++divergences;
      }
    }
  };
  int fixture_pairs = 0;
  for (const auto& f : t::load_manifest()) {
    compare(f.context(), barendregt_rename(f.process()));
  }
  fixture_pairs = pairs;
  t::Rng rng(6006);
  int sources = 0;
  for (int n = 0; n < 400; ++n) {
    t::TypedInstance inst = n % 2 ? t::random_safe_instance(rng, t::uniform(rng, 2, 10))
                                  : t::random_protocol_instance(rng, t::uniform(rng, 1, 2), t::uniform(rng, 1, 3),
                                                                false);
    Process p = barendregt_rename(inst.process);
    if (!checked(inst.context, p).accepted) continue;
    ++sources;
    compare(inst.context, p);
  }
  if (pairs < 500) fail(o, "only " + std::to_string(pairs) + " rewrite pairs");
  if (o.pass) {
    o.detail = std::to_string(pairs) + " rewrite pairs (" + std::to_string(fixture_pairs) + " from fixtures, " +
               std::to_string(pairs - fixture_pairs) + " from " + std::to_string(sources) +
               " accepted random processes), 0 divergences";
  }
  return o;
}

Outcome subject_reduction() {
  Outcome o;
  std::vector<t::TypedInstance> systems;
  int shipped = 0;
  for (const auto& f : t::load_manifest()) {
    if (!checked(f.context(), f.process()).accepted) continue;
    systems.push_back({f.context(), f.process()});
    ++shipped;
  }
  t::Rng rng(7007);
  for (int n = 0; systems.size() < 60 && n < 2000; ++n) {
    t::TypedInstance inst = n % 3 == 2 ? t::random_safe_instance(rng, t::uniform(rng, 3, 10))
                                       : t::random_protocol_instance(rng, t::uniform(rng, 1, 2),
                                                                     t::uniform(rng, 1, 3), false);
    if (checked(inst.context, inst.process).accepted) systems.push_back(std::move(inst));
  }
  OracleOptions options;
  options.reannotate_restrictions = true;
  long reducts = 0;
  long inconclusive = 0;
  long failures = 0;
  for (const auto& sys : systems) {
    DeclContext i = to_decl_context(sys.context);
    std::vector<Process> frontier{sys.process};
    std::vector<Process> seen{sys.process};
    for (int depth = 1; depth <= 3; ++depth) {
      std::vector<Process> next;
      for (const Process& p : frontier) {
        for (Process& q : reduce_step(p)) {
          bool known = false;
          for (const Process& s : seen) known = known || alpha_equal(s, q);
          if (known) continue;
          seen.push_back(q);
          next.push_back(std::move(q));
        }
      }
      for (const Process& q : next) {
        ++reducts;
        ContextSearch s = find_typing_context(i, q, options);
        if (s.verdict == Verdict::inconclusive) ++inconclusive;
        if (s.verdict != Verdict::derivable) {
          if (failures == 0) fail(o, verdict_name(s.verdict) + " after " + std::to_string(s.candidates) +
                                         " candidates: " + to_string(i) + " ; " + to_string(q));
          ++failures;
        }
      }
      frontier = std::move(next);
    }
  }
  if (systems.size() < 50) fail(o, "only " + std::to_string(systems.size()) + " accepted systems");
  if (o.pass) {
    o.detail = std::to_string(systems.size()) + " accepted systems (" + std::to_string(shipped) + " shipped), " +
               std::to_string(reducts) + " reducts within 3 steps, all typable; " + std::to_string(inconclusive) +
               " inconclusive";
  }
  return o;
}

Outcome table_regression() {
  Outcome o;
  RunReport r = cmd_table();
  int matching = 0;
  for (const auto& row : r.table) {
    bool ok = row.matches && row.first_equation && row.second_equation && row.shared_nabla;
    matching += ok;
    if (!ok) fail(o, "row " + std::to_string(row.row) + " differs");
  }
  if (r.table.size() != 24) fail(o, std::to_string(r.table.size()) + " rows");
  if (o.pass) {
    o.detail = std::to_string(matching) + "/" + std::to_string(r.table.size()) + " rows, " +
               std::to_string(parallel_table_errata().size()) + " corrected cell (row 3)";
  }
  return o;
}

Outcome runtime_audits() {
  Outcome o;
  t::Rng rng(9009);
  int runs = 0;
  for (int i = 0; i < 1000; ++i) {
    t::TypedInstance inst = i % 2 ? t::random_safe_instance(rng, t::uniform(rng, 2, 14))
                                  : t::random_protocol_instance(rng, t::uniform(rng, 1, 3), t::uniform(rng, 1, 4),
                                                                i % 3 == 0);
    try {
      checked(inst.context, inst.process);
    } catch (const AuditFailure& e) {
      fail(o, e.what());
    }
    ++runs;
  }
  for (const auto& f : t::load_manifest()) {
    try {
      checked(f.context(), f.process());
    } catch (const AuditFailure& e) {
      fail(o, e.what());
    }
    ++runs;
  }
  if (audit_failures > 0) fail(o, std::to_string(audit_failures) + " audit failures across the suite");
  if (o.pass) o.detail = "0 audit failures (" + std::to_string(runs) + " dedicated runs plus every check above)";
  return o;
}

Outcome equality_engine() {
  Outcome o;
  Type a = parse_type("<rec a. lin !(un end).lin ?(un end).a, un end>");
  Type b = parse_type("<un end, lin !(un end).rec b. lin ?(un end).lin !(un end).b>");
  if (!type_equal(a, b) || !t::tree_equal(a, b, 12)) fail(o, "interchangeable pair not equal");
  t::Rng rng(1010);
  int pairs = 0;
  int equal = 0;
  for (; pairs < 400; ++pairs) {
    EndPoint x = t::random_end_point(rng, 3);
    EndPoint y = t::coin(rng, 0.6) ? t::related_end_point(rng, x) : t::random_end_point(rng, 3);
    bool expected = t::tree_equal(x, y, 12);
    equal += expected;
    if (type_equal(x, y) != expected) fail(o, "disagree on " + to_string(x) + " vs " + to_string(y));
  }
  if (equal == 0 || equal == pairs) fail(o, "degenerate sample: " + std::to_string(equal) + " equal pairs");
  if (o.pass) {
    o.detail = std::to_string(pairs) + " pairs (" + std::to_string(equal) + " equal) plus the interchangeable pair";
  }
  return o;
}

}  // namespace
}  // namespace sessionpi

int main() {
  using namespace sessionpi;
  std::vector<Criterion> criteria{
      {1, "protocol accepted in both orders", 3.0, protocol_both_orders},
      {2, "shared-channel remark pair", 1.0, remark_pair},
      {3, "at most one pattern per call", 120.0, pattern_uniqueness},
      {4, "accepted implies derivable", 600.0, soundness_differential},
      {5, "incompleteness witnesses", 0, incompleteness_witnesses},
      {6, "congruence preservation", 300.0, congruence_preservation},
      {7, "subject reduction", 600.0, subject_reduction},
      {8, "parallel composition table", 1.0, table_regression},
      {10, "type equality engine", 30.0, equality_engine},
      // Last, so that it covers the checks made by every other criterion.
      {9, "runtime audits", 0, runtime_audits},
  };
  std::map<int, std::string> lines;
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += "; exceeded " + std::to_string(c.limit_s) + " s";
    }
    all = all && o.pass;
    char buffer[128];
    std::snprintf(buffer, sizeof buffer, "criterion %2d: %s  %-36s %9.3f s", c.id, o.pass ? "PASS" : "FAIL",
                  c.title.c_str(), secs);
    lines[c.id] = std::string(buffer) + (c.limit_s > 0 ? " (limit " + std::to_string(static_cast<int>(c.limit_s)) +
                                                             " s)"
                                                       : std::string()) +
                  "\n    " + o.detail;
    std::fprintf(stderr, "finished criterion %d\n", c.id);
  }
  for (const auto& [id, line] : lines) std::printf("%s\n", line.c_str());
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
