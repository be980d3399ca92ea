#include "rbfam/lexer.hpp"

#include <cctype>

#include "rbfam/errors.hpp"

namespace rbfam {

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
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
    if (c == '\n') {
      out.push_back({Token::Newline, "\n", line, col});
      advance(1);
    } else if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Number, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Token::Arrow, "->", line, col});
      advance(2);
    } else if (c == '"') {
      int l0 = line, c0 = col;
      size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') throw ParseError(l0, c0, "closing '\"'", "end of line");
      out.push_back({Token::String, std::string(src.substr(i + 1, j - i - 1)), l0, c0});
      advance(j - i + 1);
    } else if (std::string_view("{}();:,*=+-/^[]|").find(c) != std::string_view::npos) {
      out.push_back({Token::Punct, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(line, col, "a token", "'" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::End:
      return "end of input";
    case Token::Newline:
      return "end of line";
    case Token::String:
      return "\"" + t.text + "\"";
    default:
      return "'" + t.text + "'";
  }
}

const Token& TokenStream::peek(size_t k) const {
  size_t p = pos_ + k;
  return p < toks_.size() ? toks_[p] : toks_.back();
}

const Token& TokenStream::next() {
  const Token& t = peek();
  if (pos_ < toks_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::at_punct(std::string_view p) const {
  return peek().kind == Token::Punct && peek().text == p;
}

bool TokenStream::at_ident(std::string_view name) const {
  return peek().kind == Token::Ident && peek().text == name;
}

bool TokenStream::accept_punct(std::string_view p) {
  if (!at_punct(p)) return false;
  next();
  return true;
}

const Token& TokenStream::expect_punct(std::string_view p) {
  if (!at_punct(p)) fail("'" + std::string(p) + "'");
  return next();
}

const Token& TokenStream::expect_arrow() {
  if (!at(Token::Arrow)) fail("'->'");
  return next();
}

const Token& TokenStream::expect_ident(const std::string& what) {
  if (!at(Token::Ident)) fail(what);
  return next();
}

const Token& TokenStream::expect_keyword(std::string_view kw) {
  if (!at_ident(kw)) fail("'" + std::string(kw) + "'");
  return next();
}

unsigned long TokenStream::expect_uint(const std::string& what) {
  if (!at(Token::Number)) fail(what);
  const Token& t = peek();
  if (t.text.size() > 9) fail_at(t, what + " below 10^9");
  next();
  return std::stoul(t.text);
}

void TokenStream::skip_newlines() {
  while (at(Token::Newline)) next();
}

void TokenStream::fail(const std::string& expected) const { fail_at(peek(), expected); }

void TokenStream::fail_at(const Token& t, const std::string& expected) {
  throw ParseError(t.line, t.column, expected, describe(t));
}

namespace {

Rational parse_unsigned_rational(TokenStream& ts) {
  if (!ts.at(Token::Number)) ts.fail("a number");
  mpz_class num(ts.next().text);
  mpz_class den = 1;
  if (ts.at_punct("/") && ts.peek(1).kind == Token::Number) {
    ts.next();
    const Token& dt = ts.peek();
    den = mpz_class(ts.next().text);
    if (den == 0) TokenStream::fail_at(dt, "a nonzero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// mono := "l" | "l" "^" uint
int parse_mono(TokenStream& ts) {
  ts.expect_keyword("l");
  if (!ts.accept_punct("^")) return 1;
  unsigned long k = ts.expect_uint("an exponent");
  if (k > static_cast<unsigned long>(Poly::kMaxDegree))
    throw ResourceError("exponent " + std::to_string(k) + " exceeds degree cap");
  return static_cast<int>(k);
}

// term := rational | rational "*" mono | mono   (magnitude only)
Poly parse_term(TokenStream& ts) {
  if (ts.at_ident("l")) return Poly::monomial(1, parse_mono(ts));
  if (!ts.at(Token::Number)) ts.fail("a number or 'l'");
  Rational q = parse_unsigned_rational(ts);
  if (ts.at_punct("*") && ts.peek(1).kind == Token::Ident && ts.peek(1).text == "l") {
    ts.next();
    return Poly::monomial(q, parse_mono(ts));
  }
  return Poly(q);
}

}  // namespace

Poly parse_poly(TokenStream& ts) {
  bool neg = ts.accept_punct("-");
  Poly acc = parse_term(ts);
  if (neg) acc = -acc;
  while (ts.at_punct("+") || ts.at_punct("-")) {
    bool minus = ts.next().text == "-";
    Poly t = parse_term(ts);
    if (minus) acc -= t;
    else acc += t;
  }
  return acc;
}

Scalar parse_scalar(TokenStream& ts) {
  if (ts.at_punct("(")) {
    ts.next();
    Poly num = parse_poly(ts);
    ts.expect_punct(")");
    if (!ts.at_punct("/")) return Scalar(num);
    ts.next();
    ts.expect_punct("(");
    const Token& at = ts.peek();
    Poly den = parse_poly(ts);
    ts.expect_punct(")");
    if (den.is_zero()) TokenStream::fail_at(at, "a nonzero denominator");
    return Scalar(num, den);
  }
  return Scalar(parse_poly(ts));
}

Scalar parse_coefficient(TokenStream& ts) {
  if (ts.at_punct("(")) return parse_scalar(ts);
  return Scalar(parse_term(ts));
}

Scalar parse_scalar(std::string_view text) {
  TokenStream ts(tokenize(text));
  ts.skip_newlines();
  Scalar s = parse_scalar(ts);
  ts.skip_newlines();
  if (!ts.at(Token::End)) ts.fail("end of scalar");
  return s;
}

}  // namespace rbfam
