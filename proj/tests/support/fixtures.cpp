#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sessionpi::testing {

std::string fixture_path(const std::string& file) { return std::string(FIXTURE_DIR) + "/" + file; }

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Process Fixture::process() const { return parse_process(read_text(fixture_path(process_file))); }

Context Fixture::context() const { return parse_context(read_text(fixture_path(context_file))); }

std::vector<Fixture> load_manifest() {
  auto doc = nlohmann::json::parse(read_text(fixture_path("manifest.json")));
  std::vector<Fixture> out;
  for (const auto& item : doc) {
    Fixture f;
    f.name = item.at("name").get<std::string>();
    f.process_file = item.at("process").get<std::string>();
    f.context_file = item.at("context").get<std::string>();
    f.accept = item.at("check").get<std::string>() == "accept";
    if (item.contains("error")) f.error = item.at("error").get<std::string>();
    if (item.contains("subject")) f.subject = item.at("subject").get<std::string>();
    f.oracle = item.at("oracle").get<std::string>();
    out.push_back(std::move(f));
  }
  return out;
}

Fixture fixture(const std::string& name) {
  for (auto& f : load_manifest()) {
    if (f.name == name) return f;
  }
  throw std::runtime_error("no fixture named " + name);
}

}  // namespace sessionpi::testing
