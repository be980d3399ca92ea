#include <doctest.h>

#include <random>

#include "rbfam/errors.hpp"
#include "rbfam/lexer.hpp"
#include "rbfam/scalar.hpp"

using namespace rbfam;

namespace {

const Scalar L = Scalar::lambda();

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

// Small random rational function with nonzero denominator.
Scalar random_scalar(std::mt19937_64& rng) {
  auto poly = [&](bool nonzero) {
    for (;;) {
      std::vector<Rational> c(rng() % 3 + 1);
      for (auto& x : c) x = Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
      Poly p(c);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  Poly num = poly(false);
  Poly den = rng() % 2 ? Poly(1) : poly(true);
  return Scalar(num, den);
}

}  // namespace

TEST_CASE("addition") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  Scalar z = L + (-L);
  CHECK(z.is_zero());
  CHECK(z.den().is_one());
  CHECK(z == Scalar());

  Scalar s = L.inverse() + (L + 1).inverse();
  CHECK(s == Scalar(P({1, 2}), P({0, 1, 1})));
  for (long v : {2, 3, 5}) {
    Rational x(v);
    CHECK(s.eval(x) == 1 / x + 1 / (x + 1));
  }
}

TEST_CASE("multiplication and division") {
  CHECK(L * L.inverse() == Scalar(1));
  CHECK((3 * L) * (-L) == Scalar(Poly::monomial(-3, 2)));

  Scalar r(P({-1, 0, 1}), P({1, 1}));
  CHECK(r == L - 1);
  CHECK(r.num() == P({-1, 1}));
  CHECK(r.den().is_one());
  for (long v : {2, 7, -4}) CHECK(r.eval(v) == Rational(v - 1));

  CHECK_THROWS_AS(L / Scalar(), DivisionByZero);
  CHECK_THROWS_AS(Scalar().inverse(), DivisionByZero);
}

TEST_CASE("canonical denominators") {
  // Same function from two representatives.
  Scalar a(P({2, 4}), P({6, 2}));
  Scalar b(P({1, 2}), P({3, 1}));
  CHECK(a == b);
  CHECK(a.den().lead() == 1);
  Scalar c(P({1}), P({-2}));
  CHECK(c == q(-1, 2));
}

TEST_CASE("evaluation") {
  CHECK((-L).eval(2) == -2);
  CHECK(Scalar(1).eval(Rational(17, 5)) == 1);
  Scalar s(P({1, 2}), P({0, 1, 1}));
  CHECK(s.eval(1) == Rational(3, 2));
  CHECK_THROWS_AS(s.eval(0), PoleError);
  CHECK_THROWS_AS(s.eval(-1), PoleError);
}

TEST_CASE("degree cap") {
  Scalar p = L;
  for (int i = 0; i < 5; ++i) p = p * p;  // l^32
  CHECK(p.num().degree() == 32);
  CHECK_THROWS_AS(p * p * L, ResourceError);
}

TEST_CASE("field axioms on seeded samples") {
  std::mt19937_64 rng(20260419);
  for (int t = 0; t < 300; ++t) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Scalar());
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    for (long v : {2, 3}) {
      try {
        Rational av = a.eval(v), bv = b.eval(v);
        CHECK((a * b).eval(v) == av * bv);
        CHECK((a + b).eval(v) == av + bv);
      } catch (const PoleError&) {
      }
    }
  }
}

TEST_CASE("polynomial gcd and division") {
  Poly a = P({-1, 0, 1});// l^2 - 1
  Poly b = P({1, 2, 1}); // (l + 1)^2
  CHECK(gcd(a, b) == P({1, 1}));
  Poly qq, rr;
  Poly::divmod(P({1, 0, 0, 1}), P({1, 1}), qq, rr);
  CHECK(qq == P({1, -1, 1}));
  CHECK(rr.is_zero());
  CHECK_THROWS(Poly::exact_div(P({1, 0, 1}), P({1, 1})));
}

TEST_CASE("square roots") {
  Rational r;
  CHECK(rational_sqrt(Rational(9, 4), r));
  CHECK(r == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(2, r));
  Scalar s;
  CHECK((L * L + 2 * L + 1).sqrt(s));
  CHECK(s * s == L * L + 2 * L + 1);
  CHECK_FALSE(L.sqrt(s));
}

TEST_CASE("literal grammar") {
  CHECK(parse_scalar("1/2") == q(1, 2));
  CHECK(parse_scalar("-l") == -L);
  CHECK(parse_scalar(" 3*l^2 - l + 1/2 ") == 3 * L * L - L + q(1, 2));
  CHECK(parse_scalar("(l^2 - 1)/(l + 1)") == L - 1);
  CHECK(parse_scalar("(1)/(l)") == L.inverse());
  CHECK(parse_scalar("0").is_zero());

  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("(1)/(0)"), ParseError);
  CHECK_THROWS_AS(parse_scalar("l^"), ParseError);
  CHECK_THROWS_AS(parse_scalar("2 l"), ParseError);
  CHECK_THROWS_AS(parse_scalar("x"), ParseError);
}

TEST_CASE("serialization is canonical and reparses") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    Scalar a = random_scalar(rng);
    CHECK(parse_scalar(a.to_string()) == a);
  }
  CHECK(q(5, 6).to_string() == "5/6");
  CHECK(Scalar().to_string() == "0");
}

TEST_CASE("tokenizer positions") {
  auto toks = tokenize("ab 1/2\n  -> \"s\" # c\n");
  REQUIRE(toks.size() >= 6);
  CHECK(toks[0].kind == Token::Ident);
  CHECK(toks[0].line == 1);
  CHECK(toks[0].column == 1);
  CHECK(toks[1].kind == Token::Number);
  CHECK(toks[1].column == 4);
  bool arrow = false;
  for (const auto& t : toks)
    if (t.kind == Token::Arrow) {
      arrow = true;
      CHECK(t.line == 2);
      CHECK(t.column == 3);
    }
  CHECK(arrow);
  CHECK(toks.back().kind == Token::End);
}
