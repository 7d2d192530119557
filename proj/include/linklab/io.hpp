#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "linklab/polynomial.hpp"

namespace linklab {

// Canonical text form: terms in descending ring order, "3*x^2*y - 1/2*z".
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const PolyRing& ring);

// Shared token stream for polynomial and script parsing.
struct Token {
  enum class Kind { Ident, Int, Sym, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;

  bool is_sym(char c) const { return kind == Kind::Sym && text.size() == 1 && text[0] == c; }
  bool is_ident(std::string_view s) const { return kind == Kind::Ident && text == s; }
};

class Lexer {
 public:
  explicit Lexer(std::string_view text);
  const Token& peek(std::size_t ahead = 0);
  Token next();
  [[noreturn]] void fail(const std::string& msg) const;
  [[noreturn]] static void fail_at(const std::string& msg, const Token& t);

 private:
  void push_token();
  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  std::vector<Token> buffer_;
};

// Parses the canonical polynomial grammar:
//   poly   := ['-'] term { ('+' | '-') term }
//   term   := factor { '*' factor }
//   factor := INT ['/' INT] | VAR ['^' INT] | '(' poly ')' ['^' INT]
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

// Token-stream variant used by the script parser; stops before ',' / ')' / ';'.
Polynomial parse_polynomial(const RingPtr& ring, Lexer& lex);

}  // namespace linklab
