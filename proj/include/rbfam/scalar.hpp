#pragma once
/**
 * @file scalar.hpp
 * @brief Elements of Q(lambda) in canonical reduced form.
 *
 * A Scalar is num/den with gcd(num, den) = 1 and den monic; zero is 0/1.
 * Two Scalars are equal iff their representations are identical.
 */

#include <string>
#include <string_view>

#include "rbfam/poly.hpp"

namespace rbfam {

class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}
  Scalar(const Rational& c) : num_(c), den_(1) {}
  Scalar(Poly p) : num_(std::move(p)), den_(1) {}
  Scalar(Poly num, Poly den);

  static Scalar lambda() { return Scalar(Poly::monomial(1, 1)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  // Nonzero constant times a power of lambda.
  bool is_monomial() const { return den_.is_one() && num_.term_count() == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Scalar inverse() const;

  // Value at lambda = v; throws PoleError if the denominator vanishes there.
  Rational eval(const Rational& v) const;

  // Square root inside Q(lambda), if one exists.
  bool sqrt(Scalar& root) const;

  std::string to_string() const;

 private:
  struct Reduced {};
  Scalar(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

// Parses the scalar literal grammar ("l" is lambda). Throws ParseError.
Scalar parse_scalar(std::string_view text);

}  // namespace rbfam
