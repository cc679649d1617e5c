#include "hrcv/logic/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

namespace hrcv::logic {

ParseError::ParseError(const std::string& what, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}

namespace {

enum class Tok { Ident, Int, LParen, RParen, Comma, Bang, Amp, Bar, Arrow, Equal, LessEq, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cl = col;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), l, cl});
      advance(1);
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", l, cl});
      advance(2);
    } else if (c == '<' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::LessEq, "<=", l, cl});
      advance(2);
    } else if (c == '(') {
      single(Tok::LParen);
    } else if (c == ')') {
      single(Tok::RParen);
    } else if (c == ',') {
      single(Tok::Comma);
    } else if (c == '!') {
      single(Tok::Bang);
    } else if (c == '&') {
      single(Tok::Amp);
    } else if (c == '|') {
      single(Tok::Bar);
    } else if (c == '=') {
      single(Tok::Equal);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols) : toks_(lex(text)), symbols_(symbols) {}

  Formula parse() {
    Formula f = implies();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }
  [[noreturn]] static void fail(const std::string& msg, const Token& at) { throw ParseError(msg, at.line, at.column); }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what + (peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"));
    ++pos_;
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Formula implies() {
    Formula lhs = disj();
    if (accept(Tok::Arrow)) return Implies(lhs, implies());
    return lhs;
  }

  Formula disj() {
    Formula acc = conj();
    while (accept(Tok::Bar)) acc = Or(acc, conj());
    return acc;
  }

  Formula conj() {
    Formula acc = unary();
    while (accept(Tok::Amp)) acc = And(acc, unary());
    return acc;
  }

  Formula unary() {
    const Token& t = peek();
    if (accept(Tok::Bang)) return Not(unary());
    if (accept(Tok::LParen)) {
      Formula f = implies();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind != Tok::Ident) fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    if (t.text == "Alw" || t.text == "Som") {
      ++pos_;
      expect(Tok::LParen, "'('");
      Formula body = implies();
      expect(Tok::RParen, "')'");
      return t.text == "Alw" ? Alw(body) : Som(body);
    }
    if (t.text == "Dist") {
      ++pos_;
      expect(Tok::LParen, "'('");
      Formula body = implies();
      expect(Tok::Comma, "','");
      const Token& off = peek();
      if (off.kind != Tok::Int) fail("Dist offset must be an integer literal");
      ++pos_;
      expect(Tok::RParen, "')'");
      return Dist(body, to_int(off));
    }
    return atom();
  }

  static std::int64_t to_int(const Token& t) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || p != t.text.data() + t.text.size()) fail("integer out of range", t);
    return v;
  }

  const Symbol& declared(const Token& t) const {
    auto i = symbols_.find(t.text);
    if (!i) fail("undeclared identifier '" + t.text + "'", t);
    return symbols_.at(*i);
  }

  Formula atom() {
    const Token& id = next();
    if (id.text == "true") return True();
    if (id.text == "false") return False();
    const Symbol& s = declared(id);
    if (peek().kind == Tok::Equal || peek().kind == Tok::LessEq) {
      if (s.kind != SymbolKind::Variable) fail("'" + id.text + "' is a proposition, not a finite variable", id);
      const bool le = next().kind == Tok::LessEq;
      const Token& rhs = peek();
      if (le) {
        if (rhs.kind != Tok::Int) fail("'<=' needs an integer literal");
        if (!s.integer_domain()) fail("'<=' needs an integer-valued domain; '" + s.name + "' has none", id);
        ++pos_;
        return LeConst(s.name, to_int(rhs));
      }
      if (rhs.kind != Tok::Ident && rhs.kind != Tok::Int) fail("expected a variable or constant after '='");
      ++pos_;
      if (rhs.kind == Tok::Ident) {
        if (auto j = symbols_.find(rhs.text); j && symbols_.at(*j).kind == SymbolKind::Variable) {
          const auto& o = symbols_.at(*j);
          bool shared = std::any_of(s.domain.begin(), s.domain.end(), [&](const auto& v) { return o.value_index(v); });
          if (!shared) fail("'" + s.name + "' and '" + o.name + "' have no domain value in common", rhs);
          return EqVar(s.name, rhs.text);
        }
        if (auto j = symbols_.find(rhs.text); j)
          fail("'" + rhs.text + "' is a proposition, not a value of '" + s.name + "'", rhs);
      }
      if (!s.value_index(rhs.text)) fail("'" + rhs.text + "' is not in the domain of '" + s.name + "'", rhs);
      return Eq(s.name, rhs.text);
    }
    if (s.kind != SymbolKind::Proposition)
      fail("'" + id.text + "' is a finite variable; compare it with '=' or '<='", id);
    return Atom(s.name);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const SymbolTable& symbols_;
};

}  // namespace

Formula parse_formula(std::string_view text, const SymbolTable& symbols) { return Parser(text, symbols).parse(); }

}  // namespace hrcv::logic
