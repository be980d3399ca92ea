#pragma once
/**
 * @file lexer.hpp
 * @brief Tokenizer and token cursor for scalar literals and the text format.
 */

#include <string>
#include <string_view>
#include <vector>

#include "rbfam/scalar.hpp"

namespace rbfam {

struct Token {
  enum Kind { Ident, Number, Punct, Arrow, String, Newline, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

// '#' starts a comment running to end of line.
std::vector<Token> tokenize(std::string_view src);

std::string describe(const Token& t);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(size_t k = 0) const;
  const Token& next();
  bool at(Token::Kind kind) const { return peek().kind == kind; }
  bool at_punct(std::string_view p) const;
  bool at_ident(std::string_view name) const;
  bool accept_punct(std::string_view p);
  const Token& expect_punct(std::string_view p);
  const Token& expect_arrow();
  const Token& expect_ident(const std::string& what);
  const Token& expect_keyword(std::string_view kw);
  unsigned long expect_uint(const std::string& what);
  void skip_newlines();
  [[noreturn]] void fail(const std::string& expected) const;
  [[noreturn]] static void fail_at(const Token& t, const std::string& expected);

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

// scalar := poly | "(" poly ")" "/" "(" poly ")"
Scalar parse_scalar(TokenStream& ts);
Poly parse_poly(TokenStream& ts);
// Coefficient in front of a basis name: a single term, or a parenthesized
// polynomial optionally divided by another parenthesized polynomial.
Scalar parse_coefficient(TokenStream& ts);

}  // namespace rbfam
