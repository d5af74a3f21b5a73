#include <functional>

#include "sessionpi/declarative.hpp"

namespace sessionpi {

ContextSearch find_typing_context(const DeclContext& original, const Process& p, const OracleOptions& options,
                                  std::int64_t max_candidates) {
  std::set<std::string> avoid;
  for (const auto& [x, t] : original) avoid.insert(x);
  Process renamed = barendregt_rename(p, avoid);
  std::set<std::string> fv = free_vars(renamed);

  // Names the process never mentions can only be typed unrestricted, and any
  // unrestricted choice serves.
  std::vector<std::pair<std::string, std::vector<Type>>> choices;
  for (const auto& [x, t] : original) {
    std::vector<Type> options_for_x;
    for (Type& candidate : evolved_types(t)) {
      if (!is_safe_type(candidate)) continue;
      if (!fv.count(x) && !is_un_type(candidate)) continue;
      options_for_x.push_back(std::move(candidate));
      if (!fv.count(x)) break;
    }
    choices.emplace_back(x, std::move(options_for_x));
  }

  ContextSearch result;
  std::size_t max_level = 0;
  for (const auto& [x, options_for_x] : choices) {
    if (options_for_x.empty()) return result;
    max_level += options_for_x.size() - 1;
  }

  // Candidates are visited by increasing total distance from the original.
  bool stop = false;
  bool inconclusive = false;
  DeclContext current;
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t k, std::size_t remaining) {
    if (stop) return;
    if (k == choices.size()) {
      if (remaining != 0) return;
      if (result.candidates >= max_candidates) {
        stop = true;
        inconclusive = true;
        return;
      }
      ++result.candidates;
      OracleResult r = derivable(current, renamed, options);
      if (r.verdict == Verdict::derivable) {
        result.found = current;
        stop = true;
      } else if (r.verdict == Verdict::inconclusive) {
        inconclusive = true;
      }
      return;
    }
    const auto& [x, options_for_x] = choices[k];
    for (std::size_t j = 0; j < options_for_x.size() && j <= remaining; ++j) {
      current.insert_or_assign(x, options_for_x[j]);
      visit(k + 1, remaining - j);
      if (stop) return;
    }
  };
  for (std::size_t level = 0; level <= max_level && !stop; ++level) visit(0, level);

  if (result.found) {
    result.verdict = Verdict::derivable;
  } else if (inconclusive) {
    result.verdict = Verdict::inconclusive;
  }
  return result;
}

}  // namespace sessionpi
