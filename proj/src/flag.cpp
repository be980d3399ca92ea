#include "rbfam/flag.hpp"

#include "rbfam/errors.hpp"

namespace rbfam {

void FlagDatum::validate_shape() const {
  base.validate_shape();
  size_t n = base.dim(), s = base.semigroup.size();
  bool ok = l.size() == n && r.size() == n && t_r.rows() == n && t_r.cols() == n && t_l.rows() == n &&
            t_l.cols() == n && a1.size() == n && a2.size() == n && b.size() == s && kfam.size() == s;
  for (const auto& v : b) ok = ok && v.size() == n;
  if (!ok) throw ShapeError("flag datum over " + base.name + " has inconsistent shapes");
}

FlagDatum FlagDatum::zero(HomAlgebra base) {
  size_t n = base.dim(), s = base.semigroup.size();
  FlagDatum fd;
  fd.l = fd.r = fd.a1 = fd.a2 = zero_vec(n);
  fd.t_r = fd.t_l = Matrix(n, n);
  fd.b.assign(s, zero_vec(n));
  fd.kfam.assign(s, Scalar());
  fd.base = std::move(base);
  return fd;
}

bool operator==(const FlagDatum& a, const FlagDatum& b) {
  return a.base == b.base && a.l == b.l && a.r == b.r && a.t_r == b.t_r && a.t_l == b.t_l && a.a1 == b.a1 &&
         a.k1 == b.k1 && a.b == b.b && a.kfam == b.kfam && a.a2 == b.a2 && a.k2 == b.k2;
}

namespace {

Scalar dot(const Vec& row, const Vec& v) {
  Scalar s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!row[i].is_zero() && !v[i].is_zero()) s += row[i] * v[i];
  return s;
}

Vec one(const Scalar& s) { return Vec{s}; }

}  // namespace

Report check_flag(const FlagDatum& fd) {
  fd.validate_shape();
  const HomAlgebra& R = fd.base;
  if (!check_algebra(R).ok()) throw InvalidInput("check_flag: base algebra " + R.name + " is not valid");
  const auto& S = R.semigroup;
  size_t n = R.dim();
  const Scalar& lam = R.weight;
  const Scalar &k1 = fd.k1, &k2 = fd.k2;
  const Vec &a1 = fd.a1, &a2 = fd.a2;
  auto mul = [&](const Vec& u, const Vec& v) { return R.mul(u, v); };
  auto th = [&](const Vec& u) { return R.theta.apply(u); };
  auto l = [&](const Vec& u) { return dot(fd.l, u); };
  auto r = [&](const Vec& u) { return dot(fd.r, u); };
  auto tr = [&](const Vec& u) { return fd.t_r.apply(u); };
  auto tl = [&](const Vec& u) { return fd.t_l.apply(u); };
  auto P = [&](size_t w, const Vec& u) { return R.P[w].apply(u); };
  const auto& nm = R.basis;

  Report rep;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec a = unit_vec(n, i), b = unit_vec(n, j), ab = mul(a, b);
      rep.expect("F1", {nm[i], nm[j]}, one(l(ab) * k2), one(l(th(a)) * l(b)));
      rep.expect("F2", {nm[i], nm[j]}, one(r(a) * r(th(b))), one(r(ab) * k2));
      rep.expect("F3", {nm[i], nm[j]}, one(l(a) * r(th(b))), one(l(th(a)) * r(b)));
      rep.expect("F6", {nm[i], nm[j]}, mul(ab, a2) + k2 * tl(ab), mul(th(a), tl(b)) + l(b) * tl(th(a)));
      rep.expect("F7", {nm[i], nm[j]}, mul(tr(a), th(b)) + r(a) * tr(th(b)), mul(a2, ab) + k2 * tr(ab));
      rep.expect("F8", {nm[i], nm[j]}, mul(tl(a), th(b)) + l(a) * tr(th(b)),
                 mul(th(a), tr(b)) + r(b) * tl(th(a)));
    }

  for (size_t i = 0; i < n; ++i) {
    Vec a = unit_vec(n, i), ta = th(a);
    rep.expect("F9", {nm[i]}, mul(a1, ta) + k1 * tr(ta),
               mul(a2, tr(a)) + r(a) * tl(a2) + k2 * tr(tr(a)) + (k2 * r(a)) * a1);
    rep.expect("F10", {nm[i]}, one(k1 * r(ta)), one(l(a2) * r(a) + k2 * r(tr(a)) + k1 * k2 * r(a)));
    rep.expect("F11", {nm[i]}, mul(tl(a), a2) + k2 * tl(tl(a)) + l(a) * tr(a2) + (l(a) * k2) * a1,
               mul(ta, a1) + k1 * tl(ta));
    rep.expect("F12", {nm[i]}, one(l(tl(a)) * k2 + l(a) * r(a2) + l(a) * k1 * k2), one(l(ta) * k1));
    rep.expect("F13", {nm[i]}, mul(tr(a), a2) + k2 * tl(tr(a)) + r(a) * tr(a2) + (r(a) * k2) * a1,
               mul(a2, tl(a)) + l(a) * tl(a2) + k2 * tr(tl(a)) + (k2 * l(a)) * a1);
    rep.expect("F14", {nm[i]}, one(l(tr(a)) * k2 + r(a) * r(a2) + r(a) * k1 * k2),
               one(l(a2) * l(a) + k2 * r(tl(a)) + k2 * k1 * l(a)));
  }

  rep.expect("F15", {}, mul(a1, a2) + k2 * tl(a1) + k1 * tr(a2), mul(a2, a1) + k1 * tl(a2) + k2 * tr(a1));
  rep.expect("F16", {}, one(l(a1) * k2 + k1 * r(a2)), one(l(a2) * k1 + k2 * r(a1)));

  for (size_t al = 0; al < S.size(); ++al)
    for (size_t be = 0; be < S.size(); ++be) {
      int ab = S.mul(al, be);
      if (ab == FiniteSemigroup::kUndefined) continue;
      const std::string &sa = S.element(al), &sb = S.element(be);
      const Scalar &ka = fd.kfam[al], &kb = fd.kfam[be], &kab = fd.kfam[ab];
      const Vec &ba = fd.b[al], &bb = fd.b[be], &bab = fd.b[ab];
      for (size_t i = 0; i < n; ++i) {
        Vec a = unit_vec(n, i), Pa_a = P(al, a), Pb_a = P(be, a);
        rep.expect("F4", {sa, sb, nm[i]}, one(l(Pa_a) * kb), one(kab * (l(Pa_a) + l(a) * kb + lam * l(a))));
        rep.expect("F5", {sa, sb, nm[i]}, one(ka * r(Pb_a)), one(kab * (ka * r(a) + r(Pb_a) + lam * r(a))));
        rep.expect("F17", {sa, sb, nm[i]}, mul(Pa_a, bb) + kb * tl(Pa_a),
                   P(ab, tl(Pa_a) + mul(a, bb) + kb * tl(a) + lam * tl(a)) +
                       (l(Pa_a) + l(a) * kb + lam * l(a)) * bab);
        rep.expect("F18", {sa, sb, nm[i]}, mul(ba, Pb_a) + ka * tr(Pb_a),
                   P(ab, mul(ba, a) + ka * tr(a) + tr(Pb_a) + lam * tr(a)) +
                       (ka * r(a) + r(Pb_a) + lam * r(a)) * bab);
      }
      rep.expect("F19", {sa, sb}, mul(ba, bb) + kb * tl(ba) + ka * tr(bb) + (ka * kb) * a1,
                 P(ab, tl(ba) + ka * a1 + tr(bb) + kb * a1 + lam * a1) +
                     (l(ba) + ka * k1 + r(bb) + k1 * kb + lam * k1) * bab);
      rep.expect("F20", {sa, sb}, one(l(ba) * kb + ka * r(bb) + k1 * ka * kb),
                 one(kab * (l(ba) + k1 * ka + r(bb) + k1 * kb + lam * k1)));
    }

  for (size_t w = 0; w < S.size(); ++w)
    rep.expect("F21", {S.element(w)}, th(fd.b[w]) + fd.kfam[w] * a2, P(w, a2) + k2 * fd.b[w]);

  rep.sort();
  return rep;
}

ExtendingDatum flag_to_datum(const FlagDatum& fd, const std::string& vname) {
  fd.validate_shape();
  size_t n = fd.base.dim();
  ExtendingDatum d = ExtendingDatum::zero(fd.base, {vname}, fd.base.name + "_flag");
  for (size_t i = 0; i < n; ++i) {
    d.tri_l.at(i, 0, 0) = fd.l[i];
    d.tri_r.at(0, i, 0) = fd.r[i];
    d.harp_l.set_on_basis(i, 0, fd.t_l.column(i));
    d.harp_r.set_on_basis(0, i, fd.t_r.column(i));
  }
  d.f.set_on_basis(0, 0, fd.a1);
  d.mul_V.at(0, 0, 0) = fd.k1;
  for (size_t w = 0; w < fd.b.size(); ++w) {
    d.Q[w].set_column(0, fd.b[w]);
    d.P_V[w](0, 0) = fd.kfam[w];
  }
  d.eta.set_column(0, fd.a2);
  d.theta_V(0, 0) = fd.k2;
  return d;
}

FlagDatum datum_to_flag(const ExtendingDatum& d) {
  d.validate_shape();
  if (d.vdim() != 1) throw InvalidInput("datum_to_flag: V must be one-dimensional");
  size_t n = d.base.dim();
  FlagDatum fd = FlagDatum::zero(d.base);
  for (size_t i = 0; i < n; ++i) {
    fd.l[i] = d.tri_l.at(i, 0, 0);
    fd.r[i] = d.tri_r.at(0, i, 0);
    fd.t_l.set_column(i, d.harp_l.on_basis(i, 0));
    fd.t_r.set_column(i, d.harp_r.on_basis(0, i));
  }
  fd.a1 = d.f.on_basis(0, 0);
  fd.k1 = d.mul_V.at(0, 0, 0);
  for (size_t w = 0; w < fd.b.size(); ++w) {
    fd.b[w] = d.Q[w].column(0);
    fd.kfam[w] = d.P_V[w](0, 0);
  }
  fd.a2 = d.eta.column(0);
  fd.k2 = d.theta_V(0, 0);
  return fd;
}

size_t FlagGrid::size() const {
  std::vector<size_t> sizes = {l.size(), r.size(), t_r.size(), t_l.size(), a1.size(), k1.size(), a2.size(), k2.size()};
  for (const auto& c : b) sizes.push_back(c.size());
  for (const auto& c : kfam) sizes.push_back(c.size());
  size_t total = 1;
  for (size_t s : sizes) {
    if (s == 0) return 0;
    if (total > kMaxGridPoints * 16 / s) return kMaxGridPoints * 16;  // saturate
    total *= s;
  }
  return total;
}

std::vector<FlagDatum> enumerate_flags(const HomAlgebra& base, const FlagGrid& grid) {
  size_t ns = base.semigroup.size();
  if (grid.b.size() != ns || grid.kfam.size() != ns)
    throw ShapeError("enumerate_flags: b and k candidates must be given for every semigroup element");
  size_t total = grid.size();
  if (total > kMaxGridPoints)
    throw ResourceError("enumerate_flags: grid has more than " + std::to_string(kMaxGridPoints) + " points");
  if (total == 0) return {};
  if (!check_algebra(base).ok()) throw InvalidInput("enumerate_flags: base algebra " + base.name + " is not valid");

  // Field order fixes the odometer digits; the last digit turns fastest.
  std::vector<size_t> radix = {grid.l.size(), grid.r.size(), grid.t_r.size(), grid.t_l.size(),
                               grid.a1.size(), grid.k1.size()};
  for (const auto& c : grid.b) radix.push_back(c.size());
  for (const auto& c : grid.kfam) radix.push_back(c.size());
  radix.push_back(grid.a2.size());
  radix.push_back(grid.k2.size());
  std::vector<size_t> digit(radix.size(), 0);

  std::vector<FlagDatum> out;
  FlagDatum fd = FlagDatum::zero(base);
  for (size_t step = 0; step < total; ++step) {
    size_t p = 0;
    fd.l = grid.l[digit[p++]];
    fd.r = grid.r[digit[p++]];
    fd.t_r = grid.t_r[digit[p++]];
    fd.t_l = grid.t_l[digit[p++]];
    fd.a1 = grid.a1[digit[p++]];
    fd.k1 = grid.k1[digit[p++]];
    for (size_t w = 0; w < ns; ++w) fd.b[w] = grid.b[w][digit[p++]];
    for (size_t w = 0; w < ns; ++w) fd.kfam[w] = grid.kfam[w][digit[p++]];
    fd.a2 = grid.a2[digit[p++]];
    fd.k2 = grid.k2[digit[p++]];
    if (check_flag(fd).ok()) out.push_back(fd);
    for (size_t q = radix.size(); q-- > 0;) {
      if (++digit[q] < radix[q]) break;
      digit[q] = 0;
    }
  }
  return out;
}

}  // namespace rbfam
