#pragma once

// Tokenizer and recursive-descent readers shared by the process, type and
// context parsers.

#include <string>
#include <string_view>
#include <vector>

#include "sessionpi/syntax.hpp"

namespace sessionpi::detail {

enum class Tok {
  ident,
  zero,
  bar,
  bang,
  query,
  dot,
  lparen,
  rparen,
  colon,
  comma,
  langle,
  rangle,
  kw_new,
  kw_rec,
  kw_lin,
  kw_un,
  kw_end,
  kw_void,
  eof,
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::vector<Token> tokenize(std::string_view src, int first_line = 1);
std::string describe(Tok kind);

class Reader {
 public:
  explicit Reader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& advance();
  bool accept(Tok kind);
  const Token& expect(Tok kind, const char* what);
  bool at_end() const { return peek().kind == Tok::eof; }
  [[noreturn]] void fail(const std::string& message) const;

  Process process();
  Type type();
  EndPoint end_point();

 private:
  Process parallel();
  Process unary();
  EndPoint end_point_in_scope();

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  std::vector<std::string> type_scope_;
};

bool is_contractive(const EndPoint& s);

}  // namespace sessionpi::detail
