#include <algorithm>

#include "sessionpi/semantics.hpp"

namespace sessionpi {

namespace {

using K = Process::Kind;

struct Thread {
  Process process;
  int origin;  // copy that produced the thread, -1 for the original term
};

// A term brought to the shape (new x1:T1)...(new xn:Tn)(R1 | ... | Rm) where
// no Ri is a parallel composition or a restriction.
struct Soup {
  std::vector<std::pair<std::string, Type>> restrictions;
  std::vector<Thread> threads;
  std::vector<int> copy_parent;
  std::set<std::string> names;
};

void flatten(const Process& p, int origin, Soup& soup, std::vector<Thread>& into) {
  if (p.kind() == K::parallel) {
    flatten(p.left(), origin, soup, into);
    flatten(p.right(), origin, soup, into);
  } else if (p.kind() == K::restriction) {
    soup.restrictions.emplace_back(p.binder(), p.annotation());
    flatten(p.continuation(), origin, soup, into);
  } else {
    into.push_back(Thread{p, origin});
  }
}

Process assemble(const Soup& soup, std::vector<Process> threads) {
  Process body = Process::zero();
  if (!threads.empty()) {
    body = threads.front();
    for (auto it = threads.begin() + 1; it != threads.end(); ++it) body = Process::par(body, *it);
  }
  for (auto it = soup.restrictions.rbegin(); it != soup.restrictions.rend(); ++it) {
    body = Process::restrict(it->first, it->second, body);
  }
  return body;
}

// Every copy made so far must lie on the ancestry of one of the two threads
// that communicate; otherwise the same reduct is found with fewer unfoldings.
bool copies_all_used(const Soup& soup, int a, int b) {
  std::vector<bool> used(soup.copy_parent.size(), false);
  for (int c : {a, b}) {
    for (; c >= 0; c = soup.copy_parent[c]) used[c] = true;
  }
  return std::all_of(used.begin(), used.end(), [](bool u) { return u; });
}

void communicate(const Soup& soup, int unfoldings, std::vector<Reduction>& out) {
  const auto& ts = soup.threads;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const Process& send = ts[i].process;
      const Process& receive = ts[j].process;
      if (send.kind() != K::output || receive.kind() != K::input || send.channel() != receive.channel()) continue;
      if (!copies_all_used(soup, ts[i].origin, ts[j].origin)) continue;
      std::vector<Process> next;
      for (std::size_t k = 0; k < ts.size(); ++k) {
        if (k == i) {
          next.push_back(send.continuation());
        } else if (k == j) {
          next.push_back(substitute(receive.continuation(), send.argument(), receive.binder()));
        } else {
          next.push_back(ts[k].process);
        }
      }
      out.push_back(Reduction{assemble(soup, std::move(next)), send.channel(), unfoldings});
    }
  }
}

void explore(const Soup& soup, int budget, int unfoldings, std::vector<Reduction>& out) {
  communicate(soup, unfoldings, out);
  if (budget == 0) return;
  for (std::size_t k = 0; k < soup.threads.size(); ++k) {
    const Thread& t = soup.threads[k];
    if (t.process.kind() != K::replication) continue;
    Soup next = soup;
    Process copy = fresh_copy(t.process.body(), soup.names);
    std::set<std::string> fresh = all_names(copy);
    next.names.insert(fresh.begin(), fresh.end());
    int id = static_cast<int>(next.copy_parent.size());
    next.copy_parent.push_back(t.origin);
    std::vector<Thread> copied;
    flatten(copy, id, next, copied);
    next.threads.insert(next.threads.begin() + static_cast<std::ptrdiff_t>(k), copied.begin(), copied.end());
    explore(next, budget - 1, unfoldings + 1, out);
  }
}

}  // namespace

std::vector<Reduction> reductions(const Process& p, const ReductionOptions& options) {
  Soup soup;
  soup.names = all_names(p);
  flatten(p, -1, soup, soup.threads);
  std::vector<Reduction> found;
  explore(soup, options.unfold_radius, 0, found);
  std::stable_sort(found.begin(), found.end(),
                   [](const Reduction& a, const Reduction& b) { return a.unfoldings < b.unfoldings; });
  std::vector<Reduction> out;
  for (auto& r : found) {
    bool seen = std::any_of(out.begin(), out.end(), [&r](const Reduction& o) { return alpha_equal(o.result, r.result); });
    if (!seen) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Process> reduce_step(const Process& p, const ReductionOptions& options) {
  std::vector<Process> out;
  for (auto& r : reductions(p, options)) out.push_back(std::move(r.result));
  return out;
}

std::vector<Process> reduce_trace(const Process& p, int max_steps, const ReductionOptions& options) {
  std::vector<Process> trace{p};
  for (int step = 0; step < max_steps; ++step) {
    std::vector<Reduction> next = reductions(trace.back(), options);
    if (next.empty()) break;
    trace.push_back(std::move(next.front().result));
  }
  return trace;
}

}  // namespace sessionpi
