#include "zol/formula.hpp"

#include <cctype>

namespace zol {

namespace {

enum class Tok { Ident, Quant, Not, And, Or, Implies, Iff, Adj, Eq, LParen, RParen, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      std::string word = s.substr(i, j - i);
      const bool quant = word == "A" || word == "E" || word == "forall" || word == "exists";
      out.push_back({quant ? Tok::Quant : Tok::Ident, std::move(word), col});
      i = j;
      continue;
    }
    if (s.compare(i, 3, "<->") == 0) {
      out.push_back({Tok::Iff, "<->", col});
      i += 3;
      continue;
    }
    if (s.compare(i, 2, "->") == 0) {
      out.push_back({Tok::Implies, "->", col});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '!': kind = Tok::Not; break;
      case '&': kind = Tok::And; break;
      case '|': kind = Tok::Or; break;
      case '~': kind = Tok::Adj; break;
      case '=': kind = Tok::Eq; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '.': kind = Tok::Dot; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", col);
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Formula run() {
    Formula f = parseIff();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, peek().column); }
  std::string expectIdent(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what);
    return next().text;
  }

  Formula parseIff() {
    Formula a = parseImplies();
    if (accept(Tok::Iff)) return iff(a, parseIff());
    return a;
  }

  Formula parseImplies() {
    Formula a = parseOr();
    if (accept(Tok::Implies)) return implies(a, parseImplies());
    return a;
  }

  Formula parseOr() {
    Formula a = parseAnd();
    while (accept(Tok::Or)) a = disj(a, parseAnd());
    return a;
  }

  Formula parseAnd() {
    Formula a = parseUnary();
    while (accept(Tok::And)) a = conj(a, parseUnary());
    return a;
  }

  Formula parseUnary() {
    if (accept(Tok::Not)) return negate(parseUnary());
    if (peek().kind == Tok::Quant) {
      const std::string q = next().text;
      const bool universal = q == "A" || q == "forall";
      const std::size_t col = peek().column;
      std::string var = expectIdent("a variable after the quantifier");
      for (const auto& b : bound_)
        if (b == var) throw ParseError("variable '" + var + "' is already bound in this scope", col);
      if (!accept(Tok::Dot)) fail("expected '.' after the quantified variable");
      bound_.push_back(var);
      Formula body = parseIff();
      bound_.pop_back();
      return universal ? forall(var, body) : exists(var, body);
    }
    if (accept(Tok::LParen)) {
      Formula f = parseIff();
      if (!accept(Tok::RParen)) fail("expected ')'");
      return f;
    }
    std::string a = expectIdent("a variable, '(', '!' or a quantifier");
    if (accept(Tok::Adj)) return adj(a, expectIdent("a variable after '~'"));
    if (accept(Tok::Eq)) return eq(a, expectIdent("a variable after '='"));
    fail("expected '~' or '=' after '" + a + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

}  // namespace

Formula parse(const std::string& text) { return Parser(text).run(); }

}  // namespace zol
