#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sessionpi/commands.hpp"

namespace sessionpi {

namespace {

using json = nlohmann::ordered_json;

json context_json(const Context& g) {
  json out = json::object();
  for (const auto& [name, entry] : g) out[name] = to_string(entry);
  return out;
}

Context context_from(const json& j) {
  Context g;
  for (const auto& [name, entry] : j.items()) g.emplace(name, parse_entry(entry.get<std::string>()));
  return g;
}

json error_json(const CheckError& e) {
  return {{"kind", kind_name(e.kind())},
          {"subject", e.subject()},
          {"line", e.pos().line},
          {"column", e.pos().column},
          {"detail", e.detail()}};
}

CheckError error_from(const json& j) {
  auto kind = kind_from_name(j.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown error kind " + j.at("kind").dump());
  return CheckError(*kind, j.at("subject").get<std::string>(),
                    SourcePos{j.at("line").get<int>(), j.at("column").get<int>()}, j.at("detail").get<std::string>());
}

}  // namespace

std::string report_to_json(const RunReport& r) {
  json j;
  j["command"] = r.command;
  j["accepted"] = r.accepted;
  j["exit_code"] = r.exit_code;
  if (r.residual) j["residual"] = context_json(*r.residual);
  if (r.error) j["error"] = error_json(*r.error);
  if (r.failure) j["failure"] = *r.failure;
  if (!r.trace.empty()) {
    json steps = json::array();
    for (const auto& s : r.trace) {
      steps.push_back({{"rule", rule_name(s.rule)},
                       {"depth", s.depth},
                       {"subject", s.subject},
                       {"input", context_json(s.input)},
                       {"output", context_json(s.output)},
                       {"completed", s.completed}});
    }
    j["trace"] = std::move(steps);
  }
  if (!r.match_counts.empty()) {
    json counts = json::array();
    for (const auto& c : r.match_counts) counts.push_back({{"subject", c.subject}, {"matches", c.matches}});
    j["match_counts"] = std::move(counts);
  }
  if (r.oracle_verdict) j["oracle_verdict"] = verdict_name(*r.oracle_verdict);
  if (r.agreement) j["agreement"] = *r.agreement;
  if (r.oracle_nodes) j["oracle_nodes"] = *r.oracle_nodes;
  if (!r.reductions.empty()) {
    json steps = json::array();
    for (const auto& s : r.reductions) {
      steps.push_back({{"index", s.index}, {"channel", s.channel}, {"unfoldings", s.unfoldings}, {"term", s.term}});
    }
    j["reductions"] = std::move(steps);
  }
  if (r.iterations) j["iterations"] = *r.iterations;
  if (r.divergence) {
    const Divergence& d = *r.divergence;
    j["divergence"] = {{"iteration", d.iteration},
                       {"rule", d.rule},
                       {"direction", d.direction},
                       {"position", d.position},
                       {"source", d.source},
                       {"result", d.result},
                       {"source_accepted", d.source_accepted},
                       {"result_accepted", d.result_accepted}};
  }
  if (!r.table.empty()) {
    json rows = json::array();
    for (const auto& row : r.table) {
      rows.push_back({{"row", row.row},
                      {"expected", row.expected},
                      {"computed", row.computed},
                      {"first_equation", row.first_equation},
                      {"second_equation", row.second_equation},
                      {"shared_nabla", row.shared_nabla},
                      {"matches", row.matches}});
      if (!row.note.empty()) rows.back()["note"] = row.note;
    }
    j["table"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.accepted = j.at("accepted").get<bool>();
    r.exit_code = j.at("exit_code").get<int>();
    if (j.contains("residual")) r.residual = context_from(j["residual"]);
    if (j.contains("error")) r.error = error_from(j["error"]);
    if (j.contains("failure")) r.failure = j["failure"].get<std::string>();
    if (j.contains("trace")) {
      for (const auto& s : j["trace"]) {
        auto rule = rule_from_name(s.at("rule").get<std::string>());
        if (!rule) throw std::invalid_argument("unknown rule " + s.at("rule").dump());
        r.trace.push_back(TraceStep{*rule, s.at("depth").get<int>(), s.at("subject").get<std::string>(),
                                    context_from(s.at("input")), context_from(s.at("output")),
                                    s.at("completed").get<bool>()});
      }
    }
    if (j.contains("match_counts")) {
      for (const auto& c : j["match_counts"]) {
        r.match_counts.push_back({c.at("subject").get<std::string>(), c.at("matches").get<int>()});
      }
    }
    if (j.contains("oracle_verdict")) {
      r.oracle_verdict = verdict_from_name(j["oracle_verdict"].get<std::string>());
      if (!r.oracle_verdict) throw std::invalid_argument("unknown verdict " + j["oracle_verdict"].dump());
    }
    if (j.contains("agreement")) r.agreement = j["agreement"].get<std::string>();
    if (j.contains("oracle_nodes")) r.oracle_nodes = j["oracle_nodes"].get<std::int64_t>();
    if (j.contains("reductions")) {
      for (const auto& s : j["reductions"]) {
        r.reductions.push_back({s.at("index").get<int>(), s.at("channel").get<std::string>(),
                                s.at("unfoldings").get<int>(), s.at("term").get<std::string>()});
      }
    }
    if (j.contains("iterations")) r.iterations = j["iterations"].get<int>();
    if (j.contains("divergence")) {
      const json& d = j["divergence"];
      r.divergence = Divergence{d.at("iteration").get<int>(),        d.at("rule").get<std::string>(),
                                d.at("direction").get<std::string>(), d.at("position").get<std::string>(),
                                d.at("source").get<std::string>(),    d.at("result").get<std::string>(),
                                d.at("source_accepted").get<bool>(),  d.at("result_accepted").get<bool>()};
    }
    if (j.contains("table")) {
      for (const auto& row : j["table"]) {
        r.table.push_back(TableRow{row.at("row").get<int>(), row.at("expected").get<TableCells>(),
                                   row.at("computed").get<TableCells>(), row.at("first_equation").get<bool>(),
                                   row.at("second_equation").get<bool>(), row.at("shared_nabla").get<bool>(),
                                   row.at("matches").get<bool>(), row.value("note", std::string())});
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const RunReport& r) {
  std::ostringstream out;
  if (r.failure) out << "error: " << *r.failure << "\n";
  if (!r.trace.empty()) {
    int n = 0;
    for (const auto& s : r.trace) {
      out << ++n << ". " << std::string(2 * static_cast<std::size_t>(s.depth), ' ') << rule_name(s.rule) << "  "
          << s.subject << (s.completed ? "" : "  (failed)") << "\n";
    }
  }
  if (!r.match_counts.empty()) {
    int most = 0;
    for (const auto& c : r.match_counts) most = std::max(most, c.matches);
    out << "pattern audit: " << r.match_counts.size() << " calls, at most " << most << " matching pattern"
        << (most == 1 ? "" : "s") << " per call\n";
  }
  if (r.command == "check" && !r.failure) {
    if (r.accepted) {
      out << "accepted\n";
      if (r.residual && !r.residual->empty()) out << "residual context:\n" << to_string(*r.residual);
    } else if (r.error) {
      out << "rejected: " << r.error->what() << " (line " << r.error->pos().line << ", column "
          << r.error->pos().column << ")\n";
    }
  }
  if (r.command == "oracle" && !r.failure) {
    out << "checker: " << (r.accepted ? "accepted" : "rejected");
    if (r.error) out << " (" << r.error->what() << ")";
    out << "\n";
    if (r.oracle_verdict) out << "declarative: " << verdict_name(*r.oracle_verdict);
    if (r.oracle_nodes) out << " after " << *r.oracle_nodes << " judgments";
    out << "\n";
    if (r.agreement) out << "verdicts: " << *r.agreement << "\n";
  }
  for (const auto& s : r.reductions) {
    out << s.index << ". ";
    if (s.index > 0) {
      out << "R-Com on " << s.channel;
      if (s.unfoldings > 0) out << " after " << s.unfoldings << " replication unfolding" << (s.unfoldings == 1 ? "" : "s");
      out << "\n   ";
    }
    out << s.term << "\n";
  }
  if (r.command == "congruence" && !r.failure) {
    if (r.divergence) {
      const Divergence& d = *r.divergence;
      out << "divergence at iteration " << d.iteration << ": " << d.rule << " " << d.direction << " at " << d.position
          << "\n  " << d.source << "  [" << (d.source_accepted ? "accepted" : "rejected") << "]\n  " << d.result
          << "  [" << (d.result_accepted ? "accepted" : "rejected") << "]\n";
    } else if (r.iterations) {
      out << *r.iterations << " rewrites, no divergence\n";
    }
  }
  if (!r.table.empty()) {
    int matched = 0;
    for (const auto& row : r.table) {
      matched += row.matches;
      out << (row.matches ? "ok  " : "BAD ") << "row " << row.row << ":";
      for (const auto& cell : row.computed) out << " | " << cell;
      out << "\n";
      if (!row.note.empty()) out << "     note: " << row.note << "\n";
      if (!row.matches) {
        out << "     expected:";
        for (const auto& cell : row.expected) out << " | " << cell;
        out << "\n     equations: " << row.first_equation << row.second_equation << ", shared nabla: "
            << row.shared_nabla << "\n";
      }
    }
    out << matched << "/" << r.table.size() << " rows match\n";
  }
  return out.str();
}

}  // namespace sessionpi
