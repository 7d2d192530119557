#include "linklab/io.hpp"

#include <cctype>

namespace linklab {

std::string to_string(const Monomial& m, const PolyRing& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var_name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const PolyRing& ring = *f.ring();
  std::string s;
  bool first = true;
  for (const Term& t : f.terms()) {
    Scalar c = t.coef;
    if (first) {
      if (c.sign() < 0) {
        s += "-";
        c = -c;
      }
    } else {
      if (c.sign() < 0) {
        s += " - ";
        c = -c;
      } else {
        s += " + ";
      }
    }
    if (t.mono.is_unit()) {
      s += c.str();
    } else {
      if (!c.is_one()) s += c.str() + "*";
      s += to_string(t.mono, ring);
    }
    first = false;
  }
  return s;
}

Lexer::Lexer(std::string_view text) : text_(text) {}

void Lexer::push_token() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '\n') {
      ++pos_, ++line_, col_ = 1;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos_, ++col_;
    } else if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    } else {
      break;
    }
  }
  Token t;
  t.line = line_;
  t.col = col_;
  if (pos_ >= text_.size()) {
    t.kind = Token::Kind::End;
    buffer_.push_back(std::move(t));
    return;
  }
  char c = text_[pos_];
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    t.kind = Token::Kind::Ident;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (!std::isalnum(static_cast<unsigned char>(d)) && d != '_') break;
      t.text += d;
      ++pos_, ++col_;
    }
  } else if (std::isdigit(static_cast<unsigned char>(c))) {
    t.kind = Token::Kind::Int;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      t.text += text_[pos_];
      ++pos_, ++col_;
    }
  } else {
    t.kind = Token::Kind::Sym;
    t.text = std::string(1, c);
    ++pos_, ++col_;
  }
  buffer_.push_back(std::move(t));
}

const Token& Lexer::peek(std::size_t ahead) {
  while (buffer_.size() <= ahead) push_token();
  return buffer_[ahead];
}

Token Lexer::next() {
  peek();
  Token t = buffer_.front();
  buffer_.erase(buffer_.begin());
  return t;
}

void Lexer::fail(const std::string& msg) const {
  const Token& t = buffer_.empty() ? Token{} : buffer_.front();
  throw ParseError(msg, buffer_.empty() ? line_ : t.line, buffer_.empty() ? col_ : t.col);
}

void Lexer::fail_at(const std::string& msg, const Token& t) {
  throw ParseError(msg, t.line, t.col);
}

namespace {

std::uint32_t parse_exponent(Lexer& lex) {
  Token t = lex.next();
  if (t.kind != Token::Kind::Int) Lexer::fail_at("expected integer exponent", t);
  unsigned long v = std::stoul(t.text);
  if (v > 0xffffffu) Lexer::fail_at("exponent too large", t);
  return static_cast<std::uint32_t>(v);
}

Scalar parse_number(const RingPtr& ring, Lexer& lex) {
  Token t = lex.next();
  mpz_class num(t.text);
  Scalar c = Scalar::from_mpz(num, ring->field());
  if (lex.peek().is_sym('/')) {
    lex.next();
    Token d = lex.next();
    if (d.kind != Token::Kind::Int) Lexer::fail_at("expected denominator", d);
    mpz_class den(d.text);
    if (den == 0) Lexer::fail_at("zero denominator", d);
    c /= Scalar::from_mpz(den, ring->field());
  }
  return c;
}

Polynomial power(const Polynomial& base, std::uint32_t e) {
  Polynomial acc = Polynomial::constant(base.ring(), 1);
  for (std::uint32_t i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

Polynomial parse_factor(const RingPtr& ring, Lexer& lex) {
  const Token& t = lex.peek();
  if (t.kind == Token::Kind::Int) {
    return Polynomial::constant(ring, parse_number(ring, lex));
  }
  if (t.kind == Token::Kind::Ident) {
    Token v = lex.next();
    int idx = ring->var_index(v.text);
    if (idx < 0) Lexer::fail_at("unknown variable '" + v.text + "'", v);
    Polynomial base = Polynomial::variable(ring, static_cast<std::size_t>(idx));
    if (lex.peek().is_sym('^')) {
      lex.next();
      return power(base, parse_exponent(lex));
    }
    return base;
  }
  if (t.is_sym('(')) {
    lex.next();
    Polynomial inner = parse_polynomial(ring, lex);
    Token close = lex.next();
    if (!close.is_sym(')')) Lexer::fail_at("expected ')'", close);
    if (lex.peek().is_sym('^')) {
      lex.next();
      return power(inner, parse_exponent(lex));
    }
    return inner;
  }
  Lexer::fail_at("expected a number, variable, or '('", t);
}

Polynomial parse_term(const RingPtr& ring, Lexer& lex) {
  Polynomial acc = parse_factor(ring, lex);
  while (lex.peek().is_sym('*')) {
    lex.next();
    acc = acc * parse_factor(ring, lex);
  }
  return acc;
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, Lexer& lex) {
  bool negate = false;
  if (lex.peek().is_sym('-')) {
    lex.next();
    negate = true;
  } else if (lex.peek().is_sym('+')) {
    lex.next();
  }
  Polynomial acc = parse_term(ring, lex);
  if (negate) acc = -acc;
  while (true) {
    const Token& t = lex.peek();
    if (t.is_sym('+')) {
      lex.next();
      acc = acc + parse_term(ring, lex);
    } else if (t.is_sym('-')) {
      lex.next();
      acc = acc - parse_term(ring, lex);
    } else {
      break;
    }
  }
  return acc;
}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  Lexer lex(text);
  Polynomial p = parse_polynomial(ring, lex);
  Token t = lex.next();
  if (t.kind != Token::Kind::End) Lexer::fail_at("unexpected trailing input '" + t.text + "'", t);
  return p;
}

}  // namespace linklab
