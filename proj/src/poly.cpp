#include "rbfam/poly.hpp"

#include "rbfam/errors.hpp"

namespace rbfam {

std::string to_string(const Rational& q) { return q.get_str(); }

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  root = Rational(sqrt(n), sqrt(d));
  root.canonicalize();
  return true;
}

namespace {

void check_cap(int degree) {
  if (degree > Poly::kMaxDegree)
    throw ResourceError("polynomial degree " + std::to_string(degree) + " exceeds cap " +
                        std::to_string(Poly::kMaxDegree));
}

}  // namespace

// mpq_class(n, d) is not reduced on construction.
Poly::Poly(const Rational& c) {
  if (c != 0) {
    c_.push_back(c);
    c_.back().canonicalize();
  }
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
  check_cap(degree());
}

Poly Poly::monomial(const Rational& c, int k) {
  if (c == 0) return {};
  check_cap(k);
  std::vector<Rational> v(k + 1);
  v[k] = c;
  v[k].canonicalize();
  Poly p;
  p.c_ = std::move(v);
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  check_cap(degree());
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

int Poly::term_count() const {
  int n = 0;
  for (const auto& x : c_) n += (x != 0);
  return n;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  check_cap(a.degree() + b.degree());
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial in Poly::divmod");
  r = a;
  if (a.degree() < b.degree()) {
    q = Poly();
    return;
  }
  std::vector<Rational> qc(a.degree() - b.degree() + 1);
  const Rational& lb = b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational c = r.lead() / lb;
    qc[shift] = c;
    for (int i = 0; i <= b.degree(); ++i) r.c_[i + shift] -= c * b.c_[i];
    r.trim();
  }
  q = Poly(std::move(qc));
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly p = *this;
  Rational inv = 1 / lead();
  p *= inv;
  return p;
}

Rational Poly::eval(const Rational& v) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
  return acc;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string body;
    if (k == 0) {
      body = mag.get_str();
    } else {
      std::string mono = k == 1 ? "l" : "l^" + std::to_string(k);
      body = mag == 1 ? mono : mag.get_str() + "*" + mono;
    }
    if (first) {
      // A bare leading "-l" is outside the literal grammar, so spell out the 1.
      if (c < 0) out += (k > 0 && mag == 1) ? "-1*" + body : "-" + body;
      else out += body;
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

bool Poly::sqrt(Poly& root) const {
  if (is_zero()) {
    root = Poly();
    return true;
  }
  if (degree() % 2 != 0) return false;
  Rational lr;
  if (!rational_sqrt(lead(), lr)) return false;
  // Match coefficients from the top: root = lr*l^h + ...
  int h = degree() / 2;
  std::vector<Rational> r(h + 1);
  r[h] = lr;
  for (int k = h - 1; k >= 0; --k) {
    // coefficient of l^(h+k) in root^2 is 2*r[h]*r[k] + sum over i+j=h+k, k<i,j<h
    Rational acc = c_[h + k];
    for (int i = k + 1; i < h; ++i) {
      int j = h + k - i;
      if (j > k && j < h) acc -= r[i] * r[j];
    }
    r[k] = acc / (2 * lr);
  }
  Poly cand(std::move(r));
  if (!(cand * cand == *this)) return false;
  root = cand;
  return true;
}

}  // namespace rbfam
