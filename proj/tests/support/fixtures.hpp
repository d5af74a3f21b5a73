#pragma once

// Access to the fixture corpus and its manifest of expected verdicts.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sessionpi/syntax.hpp"
#include "sessionpi/types.hpp"

namespace sessionpi {

// Readable values in test failure messages.
inline void PrintTo(const Process& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const Type& t, std::ostream* os) { *os << to_string(t); }

}  // namespace sessionpi

namespace sessionpi::testing {

struct Fixture {
  std::string name;
  std::string process_file;
  std::string context_file;
  bool accept = false;
  std::optional<std::string> error;
  std::optional<std::string> subject;
  std::string oracle;

  Process process() const;
  Context context() const;
};

std::string fixture_path(const std::string& file);
std::string read_text(const std::string& path);
std::vector<Fixture> load_manifest();
Fixture fixture(const std::string& name);

}  // namespace sessionpi::testing
