#pragma once
/**
 * @file poly.hpp
 * @brief Univariate polynomials over Q in the indeterminate lambda.
 */

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rbfam {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Exact square root of a nonnegative rational, if it is a square.
bool rational_sqrt(const Rational& q, Rational& root);

class Poly {
 public:
  static constexpr int kMaxDegree = 64;

  Poly() = default;
  Poly(const Rational& c);
  Poly(long c) : Poly(Rational(c)) {}
  // coeffs[i] is the coefficient of lambda^i; trailing zeros are trimmed.
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, int k);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& lead() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int term_count() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division; b must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  // Exact quotient; throws if b does not divide a.
  static Poly exact_div(const Poly& a, const Poly& b);

  Poly monic() const;
  Rational eval(const Rational& v) const;

  // Descending-degree text in the literal grammar, e.g. "l^2 - 3*l + 1/2".
  std::string to_string() const;

  // Square root of a polynomial whose leading coefficient is a rational square.
  bool sqrt(Poly& root) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly gcd(Poly a, Poly b);

}  // namespace rbfam
