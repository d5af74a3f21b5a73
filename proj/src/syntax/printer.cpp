#include "sessionpi/syntax.hpp"

namespace sessionpi {

namespace {

void print(const Process& p, std::string& out);

// Operands of prefixes and replication bind tighter than '|'.
void print_tight(const Process& p, std::string& out) {
  if (p.kind() == Process::Kind::parallel) {
    out += '(';
    print(p, out);
    out += ')';
  } else {
    print(p, out);
  }
}

void print(const Process& p, std::string& out) {
  switch (p.kind()) {
    case Process::Kind::inaction:
      out += '0';
      return;
    case Process::Kind::parallel:
      // '|' associates to the left
      print(p.left(), out);
      out += " | ";
      print_tight(p.right(), out);
      return;
    case Process::Kind::replication:
      out += '!';
      print_tight(p.body(), out);
      return;
    case Process::Kind::output:
      out += p.channel();
      out += '!';
      out += p.argument();
      out += '.';
      print_tight(p.continuation(), out);
      return;
    case Process::Kind::input:
      out += p.channel();
      out += "?(";
      out += p.binder();
      out += ").";
      print_tight(p.continuation(), out);
      return;
    case Process::Kind::restriction:
      out += "new ";
      out += p.binder();
      out += ": ";
      out += p.annotation().key();
      out += ". ";
      print_tight(p.continuation(), out);
      return;
  }
}

}  // namespace

std::string to_string(const Process& p) {
  std::string out;
  print(p, out);
  return out;
}

}  // namespace sessionpi
