#include "lewis/parser.hpp"

#include <cctype>

namespace lewis {

namespace {

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  std::string tok;  // current token ("" at end)
  size_t tok_pos = 0;

  explicit Lexer(const std::string& s) : src(s) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at offset " + std::to_string(tok_pos) + ": " + msg +
                     " in \"" + src + "\"");
  }

  void advance() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) pos++;
    tok_pos = pos;
    if (pos >= src.size()) {
      tok.clear();
      return;
    }
    char c = src[pos];
    auto take = [&](size_t n) {
      tok = src.substr(pos, n);
      pos += n;
    };
    if (c == '(' || c == ')' || c == '&' || c == '|' || c == '~') {
      take(1);
      return;
    }
    if (c == '-') {
      if (src.compare(pos, 2, "->") == 0) {
        take(2);
        return;
      }
      fail("stray '-'");
    }
    if (c == '=') {
      if (src.compare(pos, 2, "=>") == 0) {
        take(2);
        return;
      }
      fail("stray '='");
    }
    if (c == '<') {
      if (src.compare(pos, 3, "<->") == 0 || src.compare(pos, 3, "<=>") == 0) {
        take(3);
        return;
      }
      fail("stray '<'");
    }
    if (c == '[') {
      if (src.compare(pos, 3, "[.]") == 0) {
        take(3);
        return;
      }
      if (src.compare(pos, 2, "[]") == 0) {
        take(2);
        return;
      }
      fail("stray '['");
    }
    if (c == '%' || std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      if (c == '%') pos++;
      if (pos >= src.size() || !std::isalpha(static_cast<unsigned char>(src[pos])))
        fail("bad metavariable");
      pos++;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        pos++;
      tok = src.substr(start, pos - start);
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  bool accept(const std::string& t) {
    if (tok == t) {
      advance();
      return true;
    }
    return false;
  }

  void expect(const std::string& t) {
    if (!accept(t)) fail("expected '" + t + "', got '" + (tok.empty() ? "<end>" : tok) + "'");
  }
};

struct Parser {
  Lexer lx;
  bool templates;

  Parser(const std::string& s, bool tmpl) : lx(s), templates(tmpl) {}

  Fml formula() {
    Fml l = strict();
    if (lx.tok == "<->" || lx.tok == "<=>") {
      bool strict_bi = lx.tok == "<=>";
      lx.advance();
      Fml r = strict();
      if (lx.tok == "<->" || lx.tok == "<=>") lx.fail("'<->' is non-associative");
      // <-> is intuitionistic iff; <=> is the strict bi-arrow (a=>b)&(b=>a).
      return strict_bi ? mk_and(mk_lewis(l, r), mk_lewis(r, l)) : mk_iff(l, r);
    }
    return l;
  }

  Fml strict() {
    Fml l = impl();
    if (lx.accept("=>")) {
      Fml r = impl();
      if (lx.tok == "=>") lx.fail("'=>' is non-associative; add parentheses");
      return mk_lewis(l, r);
    }
    return l;
  }

  Fml impl() {
    Fml l = disj();
    if (lx.accept("->")) return mk_imp(l, impl());
    return l;
  }

  Fml disj() {
    Fml l = conj();
    while (lx.accept("|")) l = mk_or(l, conj());
    return l;
  }

  Fml conj() {
    Fml l = unary();
    while (lx.accept("&")) l = mk_and(l, unary());
    return l;
  }

  Fml unary() {
    if (lx.accept("~")) return mk_neg(unary());
    if (lx.accept("[]")) return mk_box(unary());
    if (lx.accept("[.]")) return mk_boxdot(unary());
    return primary();
  }

  Fml primary() {
    if (lx.accept("(")) {
      Fml f = formula();
      lx.expect(")");
      return f;
    }
    if (lx.tok == "T") {
      lx.advance();
      return top();
    }
    if (lx.tok == "F") {
      lx.advance();
      return bot();
    }
    if (!lx.tok.empty() && lx.tok[0] == '%') {
      if (!templates) lx.fail("metavariables are not allowed here");
      Fml f = mk_atom(lx.tok);
      lx.advance();
      return f;
    }
    if (!lx.tok.empty() && std::islower(static_cast<unsigned char>(lx.tok[0]))) {
      Fml f = mk_atom(lx.tok);
      lx.advance();
      return f;
    }
    lx.fail("expected a formula, got '" + (lx.tok.empty() ? "<end>" : lx.tok) + "'");
  }
};

Fml run(const std::string& text, bool templates) {
  Parser p(text, templates);
  Fml f = p.formula();
  if (!p.lx.tok.empty()) p.lx.fail("trailing input '" + p.lx.tok + "'");
  return f;
}

}  // namespace

Fml parse(const std::string& text) { return run(text, false); }
Fml parse_template(const std::string& text) { return run(text, true); }

}  // namespace lewis
