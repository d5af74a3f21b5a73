#include <algorithm>
#include <cctype>

#include "reader.hpp"
#include "sessionpi/syntax.hpp"

namespace sessionpi::detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

Tok keyword_or_ident(const std::string& word) {
  if (word == "new") return Tok::kw_new;
  if (word == "rec") return Tok::kw_rec;
  if (word == "lin") return Tok::kw_lin;
  if (word == "un") return Tok::kw_un;
  if (word == "end") return Tok::kw_end;
  if (word == "void") return Tok::kw_void;
  return Tok::ident;
}

// U+25E6 WHITE BULLET, the void marker.
constexpr std::string_view kVoidGlyph = "\xE2\x97\xA6";

}  // namespace

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::ident: return "identifier";
    case Tok::zero: return "'0'";
    case Tok::bar: return "'|'";
    case Tok::bang: return "'!'";
    case Tok::query: return "'?'";
    case Tok::dot: return "'.'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::colon: return "':'";
    case Tok::comma: return "','";
    case Tok::langle: return "'<'";
    case Tok::rangle: return "'>'";
    case Tok::kw_new: return "'new'";
    case Tok::kw_rec: return "'rec'";
    case Tok::kw_lin: return "'lin'";
    case Tok::kw_un: return "'un'";
    case Tok::kw_end: return "'end'";
    case Tok::kw_void: return "'void'";
    case Tok::eof: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view src, int first_line) {
  std::vector<Token> out;
  int line = first_line;
  int col = 1;
  std::size_t i = 0;
  auto bump = [&](std::size_t n) {
    i += n;
    col += static_cast<int>(n);
  };
  while (i < src.size()) {
    char c = src[i];
    SourcePos pos{line, col};
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (src.substr(i, kVoidGlyph.size()) == kVoidGlyph) {
      out.push_back({Tok::kw_void, std::string(kVoidGlyph), pos});
      i += kVoidGlyph.size();
      ++col;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      out.push_back({keyword_or_ident(word), word, pos});
      bump(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '0': kind = Tok::zero; break;
      case '|': kind = Tok::bar; break;
      case '!': kind = Tok::bang; break;
      case '?': kind = Tok::query; break;
      case '.': kind = Tok::dot; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ':': kind = Tok::colon; break;
      case ',': kind = Tok::comma; break;
      case '<': kind = Tok::langle; break;
      case '>': kind = Tok::rangle; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    if (kind == Tok::zero && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))
      throw ParseError("unexpected number", pos);
    out.push_back({kind, std::string(1, c), pos});
    bump(1);
  }
  out.push_back({Tok::eof, "", SourcePos{line, col}});
  return out;
}

const Token& Reader::peek(std::size_t ahead) const {
  return tokens_[std::min(at_ + ahead, tokens_.size() - 1)];
}

const Token& Reader::advance() {
  const Token& t = peek();
  if (at_ < tokens_.size() - 1) ++at_;
  return t;
}

bool Reader::accept(Tok kind) {
  if (peek().kind != kind) return false;
  advance();
  return true;
}

const Token& Reader::expect(Tok kind, const char* what) {
  if (peek().kind != kind) {
    fail(std::string("expected ") + describe(kind) + " " + what + ", found " +
         (peek().kind == Tok::eof ? describe(Tok::eof) : "'" + peek().text + "'"));
  }
  return advance();
}

void Reader::fail(const std::string& message) const { throw ParseError(message, peek().pos); }

Process Reader::process() { return parallel(); }

Process Reader::parallel() {
  Process left = unary();
  while (peek().kind == Tok::bar) {
    SourcePos pos = advance().pos;
    Process right = unary();
    left = Process::par(std::move(left), std::move(right), pos);
  }
  return left;
}

Process Reader::unary() {
  const Token& t = peek();
  SourcePos pos = t.pos;
  switch (t.kind) {
    case Tok::zero:
      advance();
      return Process::zero(pos);
    case Tok::bang:
      advance();
      return Process::repl(unary(), pos);
    case Tok::lparen: {
      advance();
      Process inner = parallel();
      expect(Tok::rparen, "to close '('");
      return inner;
    }
    case Tok::kw_new: {
      advance();
      std::string binder = expect(Tok::ident, "after 'new'").text;
      expect(Tok::colon, "after restricted name");
      Type annotation = type();
      expect(Tok::dot, "after restriction annotation");
      return Process::restrict(std::move(binder), std::move(annotation), unary(), pos);
    }
    case Tok::ident: {
      std::string channel = advance().text;
      if (accept(Tok::bang)) {
        std::string argument = expect(Tok::ident, "as output argument").text;
        expect(Tok::dot, "after output prefix");
        return Process::output(std::move(channel), std::move(argument), unary(), pos);
      }
      if (accept(Tok::query)) {
        expect(Tok::lparen, "before input binder");
        std::string binder = expect(Tok::ident, "as input binder").text;
        expect(Tok::rparen, "after input binder");
        expect(Tok::dot, "after input prefix");
        return Process::input(std::move(channel), std::move(binder), unary(), pos);
      }
      fail("expected '!' or '?' after channel '" + channel + "'");
    }
    default:
      fail("expected a process, found " +
           (t.kind == Tok::eof ? describe(Tok::eof) : "'" + t.text + "'"));
  }
}

Type Reader::type() {
  if (accept(Tok::langle)) {
    EndPoint left = end_point_in_scope();
    expect(Tok::comma, "between channel components");
    EndPoint right = end_point_in_scope();
    expect(Tok::rangle, "to close channel type");
    return Type::channel(std::move(left), std::move(right));
  }
  return Type::end_point(end_point_in_scope());
}

EndPoint Reader::end_point() { return end_point_in_scope(); }

EndPoint Reader::end_point_in_scope() {
  const Token& t = peek();
  SourcePos pos = t.pos;
  if (t.kind == Tok::kw_lin || t.kind == Tok::kw_un) {
    Qualifier q = t.kind == Tok::kw_lin ? Qualifier::lin : Qualifier::un;
    advance();
    if (accept(Tok::kw_end)) return EndPoint::end(q);
    Polarity polarity;
    if (accept(Tok::query)) {
      polarity = Polarity::receive;
    } else if (accept(Tok::bang)) {
      polarity = Polarity::send;
    } else {
      fail("expected '?', '!' or 'end' after qualifier");
    }
    expect(Tok::lparen, "before payload type");
    Type payload = type();
    expect(Tok::rparen, "after payload type");
    expect(Tok::dot, "before continuation type");
    EndPoint cont = end_point_in_scope();
    return EndPoint::qualified(q, polarity, std::move(payload), std::move(cont));
  }
  if (t.kind == Tok::kw_rec) {
    advance();
    std::string binder = expect(Tok::ident, "after 'rec'").text;
    expect(Tok::dot, "after recursion binder");
    type_scope_.push_back(binder);
    EndPoint body = end_point_in_scope();
    type_scope_.pop_back();
    EndPoint result = EndPoint::recursive(binder, std::move(body));
    if (!is_contractive(result)) {
      throw ParseError("non-contractive recursive type '" + result.key() + "'", pos);
    }
    return result;
  }
  if (t.kind == Tok::ident) {
    std::string name = advance().text;
    if (std::find(type_scope_.begin(), type_scope_.end(), name) == type_scope_.end()) {
      throw ParseError("unbound type variable '" + name + "'", pos);
    }
    return EndPoint::variable(name);
  }
  fail("expected an end point type, found " +
       (t.kind == Tok::eof ? describe(Tok::eof) : "'" + t.text + "'"));
}

namespace {

bool contractive_impl(const EndPoint& s);

bool contractive_type(const Type& t) {
  return contractive_impl(t.first) && (!t.is_channel() || contractive_impl(t.right()));
}

bool contractive_impl(const EndPoint& s) {
  switch (s.kind()) {
    case EndPoint::Kind::variable:
      return true;
    case EndPoint::Kind::qualified:
      if (s.polarity() == Polarity::end) return true;
      return contractive_type(s.payload()) && contractive_impl(s.continuation());
    case EndPoint::Kind::recursive: {
      std::vector<std::string> chain;
      const EndPoint* cur = &s;
      while (cur->kind() == EndPoint::Kind::recursive) {
        chain.push_back(cur->name());
        cur = &cur->body();
      }
      if (cur->kind() == EndPoint::Kind::variable &&
          std::find(chain.begin(), chain.end(), cur->name()) != chain.end()) {
        return false;
      }
      return contractive_impl(*cur);
    }
  }
  return true;
}

}  // namespace

bool is_contractive(const EndPoint& s) { return contractive_impl(s); }

}  // namespace sessionpi::detail

namespace sessionpi {

Process parse_process(std::string_view src) {
  detail::Reader reader(detail::tokenize(src));
  if (reader.at_end()) reader.fail("empty process");
  Process p = reader.process();
  if (!reader.at_end()) reader.fail("unexpected '" + reader.peek().text + "' after process");
  return p;
}

Type parse_type(std::string_view src) {
  detail::Reader reader(detail::tokenize(src));
  Type t = reader.type();
  if (!reader.at_end()) reader.fail("unexpected '" + reader.peek().text + "' after type");
  return t;
}

EndPoint parse_end_point(std::string_view src) {
  detail::Reader reader(detail::tokenize(src));
  EndPoint s = reader.end_point();
  if (!reader.at_end()) reader.fail("unexpected '" + reader.peek().text + "' after type");
  return s;
}

}  // namespace sessionpi
