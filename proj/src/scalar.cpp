#include "rbfam/scalar.hpp"

#include "rbfam/errors.hpp"

namespace rbfam {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero("zero denominator while constructing a Scalar");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_constant()) {
    Rational inv = 1 / den_.lead();
    num_ *= inv;
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = Poly::exact_div(num_, g);
    den_ = Poly::exact_div(den_, g);
  }
  if (den_.lead() != 1) {
    Rational inv = 1 / den_.lead();
    num_ *= inv;
    den_ *= inv;
  }
  if (den_.is_constant()) den_ = Poly(1);
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Reduced{}); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    *this = Scalar(num_ + o.num_, den_);
    return *this;
  }
  *this = Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    if (o.num_.is_constant()) {
      num_ *= o.num_.lead();
    } else {
      num_ = num_ * o.num_;
    }
    return *this;
  }
  *this = Scalar(num_ * o.num_, den_ * o.den_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in Scalar::inverse");
  return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero in Scalar::operator/");
  return *this *= o.inverse();
}

Rational Scalar::eval(const Rational& v) const {
  Rational d = den_.eval(v);
  if (d == 0)
    throw PoleError("denominator " + den_.to_string() + " vanishes at l = " + v.get_str());
  return num_.eval(v) / d;
}

bool Scalar::sqrt(Scalar& root) const {
  if (is_zero()) {
    root = Scalar();
    return true;
  }
  Poly rn, rd;
  if (!num_.sqrt(rn) || !den_.sqrt(rd)) return false;
  root = Scalar(rn, rd);
  return true;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace rbfam
