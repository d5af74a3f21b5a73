#include <chrono>
#include <stdexcept>
#include <utility>

#include "sessionpi/commands.hpp"

namespace sessionpi {

namespace {

// Concrete types standing for the symbols of the table. Pair symbols are
// chosen dual to each other so that every pair entry is safe.
const std::vector<std::pair<std::string, std::string>>& single_symbols() {
  static const std::vector<std::pair<std::string, std::string>> symbols{
      {"lin p", "lin ?(lin end).un end"},
      {"un p", "rec a. un ?(un end).a"},
  };
  return symbols;
}

const std::vector<std::pair<std::string, std::string>>& pair_symbols() {
  static const std::vector<std::pair<std::string, std::string>> symbols{
      {"lin p1", "lin ?(un end).un end"},
      {"lin p2", "lin !(un end).un end"},
      {"un p1", "rec a. un ?(un end).a"},
      {"un p2", "rec b. un !(un end).b"},
  };
  return symbols;
}

Slot slot_of(const std::string& symbol, const std::vector<std::pair<std::string, std::string>>& symbols) {
  if (symbol == "void") return Slot::empty();
  for (const auto& [name, type] : symbols) {
    if (name == symbol) return Slot::of(parse_end_point(type));
  }
  throw std::invalid_argument("unknown table symbol '" + symbol + "'");
}

std::string symbol_of(const Slot& m, const std::vector<std::pair<std::string, std::string>>& symbols) {
  if (m.is_void()) return "void";
  for (const auto& [name, type] : symbols) {
    if (type_equal(m.type(), parse_end_point(type))) return name;
  }
  return to_string(m.type());
}

Entry entry_of(const std::string& cell) {
  if (cell.empty() || cell.front() != '<') return Entry::single(slot_of(cell, single_symbols()));
  std::size_t comma = cell.find(", ");
  if (comma == std::string::npos || cell.back() != '>') throw std::invalid_argument("bad table cell '" + cell + "'");
  return Entry::pair(slot_of(cell.substr(1, comma - 1), pair_symbols()),
                     slot_of(cell.substr(comma + 2, cell.size() - comma - 3), pair_symbols()));
}

std::string cell_of(const Entry& e) {
  if (!e.is_pair()) return symbol_of(e.first, single_symbols());
  return "<" + symbol_of(e.first, pair_symbols()) + ", " + symbol_of(*e.second, pair_symbols()) + ">";
}

}  // namespace

const std::vector<TableCells>& parallel_table() {
  static const std::vector<TableCells> rows{
      {"lin p", "lin p", "lin p", "void", "void", "void", "lin p", "void"},
      {"lin p", "lin p", "void", "void", "lin p", "lin p", "void", "void"},
      {"lin p", "void", "void", "lin p", "void", "lin p", "lin p", "void"},
      {"un p", "un p", "un p", "un p", "un p", "un p", "un p", "un p"},
      {"void", "void", "void", "void", "void", "void", "void", "void"},
      {"<lin p1, lin p2>", "<lin p1, lin p2>", "<lin p1, lin p2>", "<void, void>", "<void, void>", "<void, void>",
       "<lin p1, lin p2>", "<void, void>"},
      {"<lin p1, lin p2>", "<lin p1, lin p2>", "<lin p1, void>", "<void, void>", "<void, lin p2>",
       "<void, lin p2>", "<lin p1, void>", "<void, void>"},
      {"<lin p1, lin p2>", "<lin p1, void>", "<lin p1, void>", "<void, lin p2>", "<void, void>",
       "<void, lin p2>", "<lin p1, lin p2>", "<void, void>"},
      {"<lin p1, lin p2>", "<lin p1, lin p2>", "<void, lin p2>", "<void, void>", "<lin p1, void>",
       "<lin p1, void>", "<void, lin p2>", "<void, void>"},
      {"<lin p1, lin p2>", "<void, lin p2>", "<void, lin p2>", "<lin p1, void>", "<void, void>",
       "<lin p1, void>", "<lin p1, lin p2>", "<void, void>"},
      {"<lin p1, lin p2>", "<lin p1, lin p2>", "<void, void>", "<void, void>", "<lin p1, lin p2>",
       "<lin p1, lin p2>", "<void, void>", "<void, void>"},
      {"<lin p1, lin p2>", "<lin p1, void>", "<void, void>", "<void, lin p2>", "<lin p1, void>",
       "<lin p1, lin p2>", "<void, lin p2>", "<void, void>"},
      {"<lin p1, lin p2>", "<void, lin p2>", "<void, void>", "<lin p1, void>", "<void, lin p2>",
       "<lin p1, lin p2>", "<lin p1, void>", "<void, void>"},
      {"<lin p1, lin p2>", "<void, void>", "<void, void>", "<lin p1, lin p2>", "<void, void>",
       "<lin p1, lin p2>", "<lin p1, lin p2>", "<void, void>"},
      {"<lin p1, void>", "<lin p1, void>", "<lin p1, void>", "<void, void>", "<void, void>", "<void, void>",
       "<lin p1, void>", "<void, void>"},
      {"<lin p1, void>", "<lin p1, void>", "<void, void>", "<void, void>", "<lin p1, void>", "<lin p1, void>",
       "<void, void>", "<void, void>"},
      {"<lin p1, void>", "<void, void>", "<void, void>", "<lin p1, void>", "<void, void>", "<lin p1, void>",
       "<lin p1, void>", "<void, void>"},
      {"<void, lin p1>", "<void, lin p1>", "<void, lin p1>", "<void, void>", "<void, void>", "<void, void>",
       "<void, lin p1>", "<void, void>"},
      {"<void, lin p1>", "<void, lin p1>", "<void, void>", "<void, void>", "<void, lin p1>", "<void, lin p1>",
       "<void, void>", "<void, void>"},
      {"<void, lin p1>", "<void, void>", "<void, void>", "<void, lin p1>", "<void, void>", "<void, lin p1>",
       "<void, lin p1>", "<void, void>"},
      {"<un p1, un p2>", "<un p1, un p2>", "<un p1, un p2>", "<un p1, un p2>", "<un p1, un p2>", "<un p1, un p2>",
       "<un p1, un p2>", "<un p1, un p2>"},
      {"<un p1, void>", "<un p1, void>", "<un p1, void>", "<un p1, void>", "<un p1, void>", "<un p1, void>",
       "<un p1, void>", "<un p1, void>"},
      {"<void, un p2>", "<void, un p2>", "<void, un p2>", "<void, un p2>", "<void, un p2>", "<void, un p2>",
       "<void, un p2>", "<void, un p2>"},
      {"<void, void>", "<void, void>", "<void, void>", "<void, void>", "<void, void>", "<void, void>",
       "<void, void>", "<void, void>"},
  };
  return rows;
}

const std::vector<TableErratum>& parallel_table_errata() {
  static const std::vector<TableErratum> errata{
      {3, 5, "void", "lin p",
       "lin p |> void = lin p by definition, as in rows 2, 14 and 17; the printed table has void"},
  };
  return errata;
}

RunReport cmd_table() {
  auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = "table";
  report.accepted = true;
  int index = 0;
  for (const TableCells& expected : parallel_table()) {
    TableRow row;
    row.row = ++index;
    row.expected = expected;
    for (const auto& e : parallel_table_errata()) {
      if (e.row == row.row) {
        row.note = "column " + std::to_string(e.column + 1) + " corrected from '" + e.printed + "' to '" + e.corrected +
                   "': " + e.reason;
      }
    }
    try {
      Entry g1 = entry_of(expected[0]);
      Entry g2 = entry_of(expected[1]);
      Entry g3 = entry_of(expected[2]);
      Entry c12 = closure(g1, g2);
      Entry c23 = closure(g2, g3);
      Entry c13 = closure(g1, g3);
      Entry g4 = update(c12, g3);
      Entry n1 = nabla(g1);
      row.computed = {cell_of(g1), cell_of(g2), cell_of(g3), cell_of(c12),
                      cell_of(c23), cell_of(c13), cell_of(g4), cell_of(n1)};
      row.second_equation = true;
      row.first_equation = entries_equal(update(c23, g4), g1);
      row.shared_nabla = entries_equal(n1, nabla(g2));
      row.matches = row.first_equation && row.second_equation && row.shared_nabla && row.computed == expected;
    } catch (const AlgebraError&) {
      row.computed.fill("undefined");
    }
    report.accepted = report.accepted && row.matches;
    report.table.push_back(std::move(row));
  }
  report.exit_code = report.accepted ? exit_code::accepted : exit_code::rejected;
  report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sessionpi
