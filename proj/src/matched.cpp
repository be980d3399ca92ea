#include "rbfam/matched.hpp"

#include <algorithm>

#include "rbfam/errors.hpp"
#include "rbfam/standard.hpp"

namespace rbfam {

void MatchedPair::validate_shape() const {
  R.validate_shape();
  V.validate_shape();
  size_t n = R.dim(), m = V.dim();
  auto bil = [&](const Bilinear& b, size_t l, size_t r, size_t o, const char* what) {
    if (b.left_dim() != l || b.right_dim() != r || b.out_dim() != o)
      throw ShapeError(std::string("matched pair: ") + what + " has the wrong shape");
  };
  bil(tri_l, n, m, m, "tri_l");
  bil(tri_r, m, n, m, "tri_r");
  bil(harp_r, m, n, n, "harp_r");
  bil(harp_l, n, m, n, "harp_l");
}

MatchedPair MatchedPair::zero(HomAlgebra r, HomAlgebra v) {
  size_t n = r.dim(), m = v.dim();
  return MatchedPair{std::move(r), std::move(v), Bilinear(n, m, m), Bilinear(m, n, m), Bilinear(m, n, n),
                     Bilinear(n, m, n)};
}

bool operator==(const MatchedPair& a, const MatchedPair& b) {
  return a.R == b.R && a.V == b.V && a.tri_l == b.tri_l && a.tri_r == b.tri_r && a.harp_r == b.harp_r &&
         a.harp_l == b.harp_l;
}

Report check_matched_pair(const MatchedPair& mp) {
  mp.validate_shape();
  const HomAlgebra &R = mp.R, &V = mp.V;
  if (!(R.semigroup == V.semigroup) || !(R.weight == V.weight))
    throw InvalidInput("check_matched_pair: semigroup or weight mismatch");
  if (!check_algebra(R).ok()) throw InvalidInput("check_matched_pair: " + R.name + " is not a valid algebra");
  if (!check_algebra(V).ok()) throw InvalidInput("check_matched_pair: " + V.name + " is not a valid algebra");

  Report rep;
  rep.append(check_bimodule(Bimodule{R, V.basis, V.theta, V.P, mp.tri_l, mp.tri_r}), "M1:");
  rep.append(check_bimodule(Bimodule{V, R.basis, R.theta, R.P, mp.harp_r, mp.harp_l}), "M2:");

  size_t n = R.dim(), m = V.dim();
  auto rr = [&](const Vec& a, const Vec& b) { return R.mul(a, b); };
  auto vv = [&](const Vec& x, const Vec& y) { return V.mul(x, y); };
  auto tl = [&](const Vec& a, const Vec& x) { return mp.tri_l.apply(a, x); };
  auto tr = [&](const Vec& x, const Vec& a) { return mp.tri_r.apply(x, a); };
  auto hr = [&](const Vec& x, const Vec& a) { return mp.harp_r.apply(x, a); };
  auto hl = [&](const Vec& a, const Vec& x) { return mp.harp_l.apply(a, x); };
  auto th = [&](const Vec& a) { return R.theta.apply(a); };
  auto thV = [&](const Vec& x) { return V.theta.apply(x); };
  const auto &rn = R.basis, &vn = V.basis;

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t p = 0; p < m; ++p) {
        Vec a = unit_vec(n, i), b = unit_vec(n, j), x = unit_vec(m, p);
        rep.expect("M3", {rn[i], rn[j], vn[p]}, hl(rr(a, b), thV(x)), rr(th(a), hl(b, x)) + hl(th(a), tl(b, x)));
        // (x, a, b) with a = a_i, b = a_j
        rep.expect("M4", {vn[p], rn[i], rn[j]}, rr(hr(x, a), th(b)) + hr(tr(x, a), th(b)), hr(thV(x), rr(a, b)));
        rep.expect("M5", {rn[i], vn[p], rn[j]}, rr(hl(a, x), th(b)) + hr(tl(a, x), th(b)),
                   rr(th(a), hr(x, b)) + hl(th(a), tr(x, b)));
      }
  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q)
      for (size_t i = 0; i < n; ++i) {
        Vec x = unit_vec(m, p), y = unit_vec(m, q), a = unit_vec(n, i);
        rep.expect("M6", {vn[p], vn[q], rn[i]}, tr(vv(x, y), th(a)), tr(thV(x), hr(y, a)) + vv(thV(x), tr(y, a)));
        rep.expect("M7", {rn[i], vn[p], vn[q]}, tl(hl(a, x), thV(y)) + vv(tl(a, x), thV(y)), tl(th(a), vv(x, y)));
        rep.expect("M8", {vn[p], rn[i], vn[q]}, tl(hr(x, a), thV(y)) + vv(tr(x, a), thV(y)),
                   tr(thV(x), hl(a, y)) + vv(thV(x), tl(a, y)));
      }
  rep.sort();
  return rep;
}

ExtendingDatum zero_extension(const MatchedPair& mp) {
  mp.validate_shape();
  ExtendingDatum d = direct_sum_datum(mp.R, mp.V, mp.R.name + "><" + mp.V.name);
  d.tri_l = mp.tri_l;
  d.tri_r = mp.tri_r;
  d.harp_r = mp.harp_r;
  d.harp_l = mp.harp_l;
  return d;
}

MatchedPair pair_of(const ExtendingDatum& d) {
  d.validate_shape();
  bool zero = d.f.is_zero() && d.eta.is_zero();
  for (const auto& q : d.Q) zero = zero && q.is_zero();
  if (!zero) throw InvalidInput("pair_of: datum has nonzero f, Q or eta");
  HomAlgebra v = HomAlgebra::zero("V", d.vbasis, d.base.semigroup, d.base.weight);
  v.mu = d.mul_V;
  v.P = d.P_V;
  v.theta = d.theta_V;
  return MatchedPair{d.base, std::move(v), d.tri_l, d.tri_r, d.harp_r, d.harp_l};
}

HomAlgebra build_bicrossed(const MatchedPair& mp) {
  Report rep = check_matched_pair(mp);
  if (!rep.ok()) throw InvalidInput("build_bicrossed: pair fails " + rep.items().front().label);
  return build_unified_product(zero_extension(mp)).algebra;
}

namespace {

// Host name for a span vector that is a basis vector, else prefix + index.
std::vector<std::string> span_names(const HomAlgebra& e, const Matrix& span, const std::string& prefix) {
  std::vector<std::string> names;
  for (size_t j = 0; j < span.cols(); ++j) {
    int hit = -1;
    for (size_t i = 0; i < span.rows(); ++i) {
      if (span(i, j).is_zero()) continue;
      hit = (hit == -1 && span(i, j).is_one()) ? static_cast<int>(i) : -2;
    }
    names.push_back(hit >= 0 ? e.basis[hit] : prefix + std::to_string(j + 1));
  }
  return names;
}

}  // namespace

Factorization check_factorization(const HomAlgebra& e, const Matrix& r_span, const Matrix& v_span) {
  e.validate_shape();
  size_t N = e.dim(), n = r_span.cols(), m = v_span.cols();
  if (r_span.rows() != N || v_span.rows() != N) throw ShapeError("check_factorization: span rows must equal dim E");
  Matrix t = hcat(r_span, v_span);
  if (n + m != N || rank(t) != N) throw InvalidInput("check_factorization: spans do not form a direct sum decomposition");

  Factorization out;
  out.report.append(check_subalgebra(e, r_span), "R-block:");
  out.report.append(check_subalgebra(e, v_span), "V-block:");
  if (!out.report.ok()) return out;

  HomAlgebra moved = transport(e, t);
  std::vector<std::string> names = span_names(e, r_span, "r");
  auto vnames = span_names(e, v_span, "v");
  names.insert(names.end(), vnames.begin(), vnames.end());
  moved.basis = names;
  ExtendingDatum d = extension_to_datum(moved, canonical_retraction(n, m));
  bool zero = d.f.is_zero() && d.eta.is_zero();
  for (const auto& q : d.Q) zero = zero && q.is_zero();
  if (!zero) throw InternalError("check_factorization: closed complement produced nonzero f, Q or eta");
  out.pair = pair_of(d);
  out.pair->R.name = "R";
  return out;
}

const std::vector<std::array<int, 4>>& table3_published() {
  static const std::vector<std::array<int, 4>> rows = {
      {0, 0, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 0, 0}};
  return rows;
}

FlagGrid table3_grid() {
  HomAlgebra base = standard::line_R();
  Scalar lam = Scalar::lambda();
  FlagGrid g;
  g.l = g.r = {{Scalar(0)}, {Scalar(1)}};
  Matrix zero(1, 1), one = Matrix::identity(1);
  g.t_r = g.t_l = {zero, one};
  g.a1 = g.a2 = {{Scalar(0)}};
  g.k1 = g.k2 = {Scalar(1)};
  g.b = {{{Scalar(0)}}, {{Scalar(0)}}};
  g.kfam = {{-lam}, {-lam}};
  return g;
}

Table3Result reproduce_table3() {
  Table3Result res;
  res.found = enumerate_flags(standard::line_R(), table3_grid());
  std::vector<std::array<int, 4>> got;
  for (const auto& fd : res.found) {
    std::array<int, 4> row{};
    const Scalar* v[4] = {&fd.l[0], &fd.r[0], &fd.t_r(0, 0), &fd.t_l(0, 0)};
    for (int i = 0; i < 4; ++i) row[i] = v[i]->is_one() ? 1 : 0;
    got.push_back(row);
  }
  auto want = table3_published();
  auto a = got, b = want;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  res.matches = a == b;
  res.rows = res.matches ? want : got;
  return res;
}

}  // namespace rbfam
