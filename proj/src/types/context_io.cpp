#include <set>

#include "../syntax/reader.hpp"
#include "sessionpi/types.hpp"

namespace sessionpi {

namespace {

Slot read_slot(detail::Reader& reader) {
  if (reader.accept(detail::Tok::kw_void)) return Slot::empty();
  return Slot::of(reader.end_point());
}

Entry read_entry(detail::Reader& reader) {
  if (!reader.accept(detail::Tok::langle)) return Entry::single(read_slot(reader));
  Slot left = read_slot(reader);
  reader.expect(detail::Tok::comma, "between channel components");
  Slot right = read_slot(reader);
  reader.expect(detail::Tok::rangle, "to close the channel type");
  return Entry::pair(std::move(left), std::move(right));
}

}  // namespace

Context parse_context(std::string_view src) {
  Context out;
  int line = 1;
  std::size_t start = 0;
  while (start <= src.size()) {
    std::size_t stop = src.find('\n', start);
    if (stop == std::string_view::npos) stop = src.size();
    detail::Reader reader(detail::tokenize(src.substr(start, stop - start), line));
    if (!reader.at_end()) {
      detail::Token name = reader.expect(detail::Tok::ident, "at start of binding");
      reader.expect(detail::Tok::colon, "after name");
      Entry entry = read_entry(reader);
      if (!reader.at_end()) reader.fail("unexpected '" + reader.peek().text + "' after type");
      if (!out.emplace(name.text, std::move(entry)).second) {
        throw ParseError("duplicate binding for '" + name.text + "'", name.pos);
      }
    }
    start = stop + 1;
    ++line;
  }
  return out;
}

Entry parse_entry(std::string_view src) {
  detail::Reader reader(detail::tokenize(src));
  Entry entry = read_entry(reader);
  if (!reader.at_end()) reader.fail("unexpected '" + reader.peek().text + "' after entry");
  return entry;
}

std::string to_string(const Slot& m) { return m.is_void() ? "void" : m.type().key(); }

std::string to_string(const Entry& e) {
  if (!e.is_pair()) return to_string(e.first);
  return "<" + to_string(e.first) + ", " + to_string(*e.second) + ">";
}

std::string to_string(const Context& g) {
  std::string out;
  for (const auto& [name, entry] : g) out += name + " : " + to_string(entry) + "\n";
  return out;
}

std::string to_string(const DeclContext& i) {
  std::string out;
  for (const auto& [name, t] : i) out += name + " : " + t.key() + "\n";
  return out;
}

}  // namespace sessionpi
