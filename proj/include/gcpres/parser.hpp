#pragma once

// Reader for the ';'-terminated system format:
//
//   vars x1 x2;        # x-block, ordered
//   params y;          # parameters, may be empty
//   homogenize x0;     # optional: homogenize every form with a fresh x-variable
//   f1 = x1^2 - x2^2*y^2 + x1*x2 - x2^2*y;
//
// Precedence: '^' binds tightest, then unary '-', then '*', then binary '+'/'-'.
// There is no implicit multiplication; rationals are written 3/4.

#include <cctype>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcpres/errors.hpp"
#include "gcpres/poly.hpp"
#include "gcpres/system.hpp"

namespace gcpres {

struct NamedForm {
  std::string name;
  Poly poly;
  std::size_t line = 0;
};

struct SystemSource {
  Ring ring;
  std::vector<std::string> xvars;
  std::vector<std::string> params;
  std::optional<std::string> homogenize;
  std::vector<NamedForm> forms;
};

namespace detail {

enum class TokenKind { Identifier, Number, Plus, Minus, Star, Caret, LParen, RParen, Equals, Semicolon, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::string describe(const Token& t) {
  if (t.kind == TokenKind::End) return "end of input";
  return "'" + t.text + "'";
}

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, col = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      tokens.push_back({TokenKind::Identifier, std::string(text.substr(i, j - i)), l, col});
      advance(j - i);
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < text.size() && is_digit(text[j])) ++j;
      if (j + 1 < text.size() && text[j] == '/' && is_digit(text[j + 1])) {
        ++j;
        while (j < text.size() && is_digit(text[j])) ++j;
      }
      tokens.push_back({TokenKind::Number, std::string(text.substr(i, j - i)), l, col});
      advance(j - i);
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '=': kind = TokenKind::Equals; break;
      case ';': kind = TokenKind::Semicolon; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", l, col);
    }
    tokens.push_back({kind, std::string(1, c), l, col});
    advance(1);
  }
  tokens.push_back({TokenKind::End, "", line, column});
  return tokens;
}

/// Syntax tree; identifiers are resolved only after the whole expression parsed.
struct Expr {
  enum class Kind { Number, Identifier, Add, Sub, Mul, Neg, Pow } kind;
  std::string text;
  std::size_t line = 0, column = 0;
  std::size_t exponent = 0;
  std::vector<Expr> children;
};

class ExprParser {
 public:
  ExprParser(const std::vector<Token>& tokens, std::size_t pos) : tokens_(tokens), pos_(pos) {}

  std::size_t position() const noexcept { return pos_; }
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  const Token& expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return take();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + ", found " + describe(peek()), peek().line, peek().column);
  }

  Expr expression() {
    Expr lhs = term();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const Token& op = take();
      Expr node{op.kind == TokenKind::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op.text, op.line, op.column, 0, {}};
      node.children.push_back(std::move(lhs));
      node.children.push_back(term());
      lhs = std::move(node);
    }
    return lhs;
  }

 private:
  Expr term() {
    Expr lhs = factor();
    while (peek().kind == TokenKind::Star) {
      const Token& op = take();
      Expr node{Expr::Kind::Mul, op.text, op.line, op.column, 0, {}};
      node.children.push_back(std::move(lhs));
      node.children.push_back(factor());
      lhs = std::move(node);
    }
    return lhs;
  }

  Expr factor() {
    if (peek().kind == TokenKind::Minus) {
      const Token& op = take();
      Expr node{Expr::Kind::Neg, op.text, op.line, op.column, 0, {}};
      node.children.push_back(factor());
      return node;
    }
    Expr base = primary();
    if (peek().kind != TokenKind::Caret) return base;
    const Token& op = take();
    const Token& e = peek();
    if (e.kind != TokenKind::Number || e.text.find('/') != std::string::npos) fail("expected a natural exponent");
    take();
    Expr node{Expr::Kind::Pow, op.text, op.line, op.column, 0, {}};
    if (e.text.size() > 9) throw ParseError("exponent too large", e.line, e.column);
    node.exponent = std::stoul(e.text);
    node.children.push_back(std::move(base));
    return node;
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Identifier:
        take();
        return Expr{Expr::Kind::Identifier, t.text, t.line, t.column, 0, {}};
      case TokenKind::Number:
        take();
        return Expr{Expr::Kind::Number, t.text, t.line, t.column, 0, {}};
      case TokenKind::LParen: {
        take();
        Expr inner = expression();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      default:
        fail("expected an operand");
    }
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_;
};

inline Poly build(const Expr& e, const Ring& ring, bool allow_epsilon) {
  switch (e.kind) {
    case Expr::Kind::Number: {
      Rational q;
      if (q.set_str(e.text, 10) != 0) throw ParseError("malformed number '" + e.text + "'", e.line, e.column);
      if (q.get_den() == 0) throw ParseError("zero denominator", e.line, e.column);
      q.canonicalize();
      return Poly(ring, q);
    }
    case Expr::Kind::Identifier: {
      auto index = ring->find(e.text);
      if (!index || (!allow_epsilon && e.text == kEpsilonName))
        throw ParseError("undeclared identifier '" + e.text + "'", e.line, e.column);
      return Poly::variable(ring, *index);
    }
    case Expr::Kind::Add: return build(e.children[0], ring, allow_epsilon) + build(e.children[1], ring, allow_epsilon);
    case Expr::Kind::Sub: return build(e.children[0], ring, allow_epsilon) - build(e.children[1], ring, allow_epsilon);
    case Expr::Kind::Mul: return build(e.children[0], ring, allow_epsilon) * build(e.children[1], ring, allow_epsilon);
    case Expr::Kind::Neg: return -build(e.children[0], ring, allow_epsilon);
    case Expr::Kind::Pow: return build(e.children[0], ring, allow_epsilon).pow(e.exponent);
  }
  throw InternalError("unknown expression node");
}

}  // namespace detail

/// Parses one expression over an existing ring. `eps` is accepted only when allow_epsilon is set.
inline Poly parse_poly(std::string_view text, const Ring& ring, bool allow_epsilon = false) {
  const auto tokens = detail::tokenize(text);
  detail::ExprParser parser(tokens, 0);
  detail::Expr e = parser.expression();
  if (parser.peek().kind != detail::TokenKind::End) parser.fail("expected end of expression");
  return detail::build(e, ring, allow_epsilon);
}

/// Parses "e1; e2; ..." (trailing ';' optional).
inline std::vector<Poly> parse_poly_list(std::string_view text, const Ring& ring) {
  const auto tokens = detail::tokenize(text);
  detail::ExprParser parser(tokens, 0);
  std::vector<Poly> out;
  while (parser.peek().kind != detail::TokenKind::End) {
    detail::Expr e = parser.expression();
    out.push_back(detail::build(e, ring, false));
    if (parser.peek().kind == detail::TokenKind::Semicolon) {
      parser.take();
    } else if (parser.peek().kind != detail::TokenKind::End) {
      parser.fail("expected ';'");
    }
  }
  return out;
}

inline SystemSource parse_system(std::string_view text) {
  using detail::TokenKind;
  const auto tokens = detail::tokenize(text);
  detail::ExprParser parser(tokens, 0);
  SystemSource src;

  struct PendingForm {
    std::string name;
    detail::Expr expr;
    std::size_t line;
  };
  std::vector<PendingForm> pending;
  std::vector<std::string> declared;

  auto declare = [&](const detail::Token& t) {
    if (t.text == kEpsilonName) throw ParseError("'" + t.text + "' is reserved", t.line, t.column);
    for (const auto& d : declared)
      if (d == t.text) throw ParseError("duplicate declaration of '" + t.text + "'", t.line, t.column);
    declared.push_back(t.text);
  };

  while (parser.peek().kind != TokenKind::End) {
    const detail::Token& head = parser.expect(TokenKind::Identifier, "a header keyword or form name");
    const bool is_header = parser.peek().kind != TokenKind::Equals &&
                           (head.text == "vars" || head.text == "params" || head.text == "homogenize");
    if (is_header) {
      if (!pending.empty()) throw ParseError("header '" + head.text + "' after a form", head.line, head.column);
      if (head.text == "homogenize") {
        if (src.homogenize) throw ParseError("duplicate homogenize directive", head.line, head.column);
        const detail::Token& v = parser.expect(TokenKind::Identifier, "a variable name");
        declare(v);
        src.homogenize = v.text;
      } else {
        auto& block = head.text == "vars" ? src.xvars : src.params;
        while (parser.peek().kind == TokenKind::Identifier) {
          const detail::Token& v = parser.take();
          declare(v);
          block.push_back(v.text);
        }
      }
      parser.expect(TokenKind::Semicolon, "';'");
      continue;
    }
    declare(head);
    parser.expect(TokenKind::Equals, "'='");
    detail::Expr e = parser.expression();
    parser.expect(TokenKind::Semicolon, "';'");
    pending.push_back({head.text, std::move(e), head.line});
  }
  if (pending.empty()) throw ParseError("no forms declared", tokens.back().line, tokens.back().column);

  std::vector<std::string> names = src.xvars;
  if (src.homogenize) names.push_back(*src.homogenize);
  src.ring = system_ring(std::move(names), src.params);
  for (auto& f : pending) src.forms.push_back({f.name, detail::build(f.expr, src.ring, false), f.line});
  return src;
}

/// Applies the homogenization directive, then checks every System invariant.
inline System validate(const SystemSource& src) {
  std::vector<Poly> forms;
  std::vector<std::string> names;
  std::size_t n_x = src.xvars.size();
  for (const auto& f : src.forms) {
    names.push_back(f.name);
    forms.push_back(f.poly);
  }
  if (src.homogenize) {
    std::vector<std::size_t> xidx;
    for (std::size_t i = 0; i < src.xvars.size(); ++i) xidx.push_back(i);
    const std::size_t fresh = src.xvars.size();
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (forms[i].involves(fresh))
        throw ValidationError("form '" + names[i] + "' already uses the homogenizing variable '" + *src.homogenize +
                              "'");
      forms[i] = homogenize(forms[i], xidx, fresh);
    }
    ++n_x;
  }
  return make_system(src.ring, n_x, std::move(forms), std::move(names));
}

inline System parse_and_validate(std::string_view text) { return validate(parse_system(text)); }

}  // namespace gcpres
