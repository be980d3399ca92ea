#include "rbfam/extending.hpp"

#include "rbfam/errors.hpp"

namespace rbfam {

void ExtendingDatum::validate_shape() const {
  base.validate_shape();
  size_t n = base.dim(), m = vdim(), s = base.semigroup.size();
  auto bil = [&](const Bilinear& b, size_t l, size_t r, size_t o, const char* what) {
    if (b.left_dim() != l || b.right_dim() != r || b.out_dim() != o)
      throw ShapeError(std::string("datum ") + name + ": " + what + " has the wrong shape");
  };
  bil(tri_l, n, m, m, "tri_l");
  bil(tri_r, m, n, m, "tri_r");
  bil(harp_r, m, n, n, "harp_r");
  bil(harp_l, n, m, n, "harp_l");
  bil(f, m, m, n, "f");
  bil(mul_V, m, m, m, "mul_V");
  auto mat = [&](const Matrix& a, size_t r, size_t c, const char* what) {
    if (a.rows() != r || a.cols() != c)
      throw ShapeError(std::string("datum ") + name + ": " + what + " has the wrong shape");
  };
  if (Q.size() != s || P_V.size() != s) throw ShapeError("datum " + name + ": Q or P_V not total on the semigroup");
  for (const auto& q : Q) mat(q, n, m, "Q");
  for (const auto& p : P_V) mat(p, m, m, "P_V");
  mat(eta, n, m, "eta");
  mat(theta_V, m, m, "theta_V");
}

ExtendingDatum ExtendingDatum::zero(HomAlgebra base, std::vector<std::string> vbasis, std::string name) {
  size_t n = base.dim(), m = vbasis.size(), s = base.semigroup.size();
  ExtendingDatum d;
  d.name = std::move(name);
  d.tri_l = Bilinear(n, m, m);
  d.tri_r = Bilinear(m, n, m);
  d.harp_r = Bilinear(m, n, n);
  d.harp_l = Bilinear(n, m, n);
  d.f = Bilinear(m, m, n);
  d.mul_V = Bilinear(m, m, m);
  d.Q.assign(s, Matrix(n, m));
  d.P_V.assign(s, Matrix(m, m));
  d.eta = Matrix(n, m);
  d.theta_V = Matrix(m, m);
  d.base = std::move(base);
  d.vbasis = std::move(vbasis);
  return d;
}

bool operator==(const ExtendingDatum& a, const ExtendingDatum& b) {
  return a.base == b.base && a.vbasis == b.vbasis && a.tri_l == b.tri_l && a.tri_r == b.tri_r &&
         a.harp_r == b.harp_r && a.harp_l == b.harp_l && a.f == b.f && a.mul_V == b.mul_V &&
         a.Q == b.Q && a.P_V == b.P_V && a.eta == b.eta && a.theta_V == b.theta_V;
}

UnifiedProduct build_unified_product(const ExtendingDatum& d) {
  d.validate_shape();
  const HomAlgebra& r = d.base;
  size_t n = r.dim(), m = d.vdim(), N = n + m;
  std::vector<std::string> basis = r.basis;
  basis.insert(basis.end(), d.vbasis.begin(), d.vbasis.end());
  HomAlgebra e = HomAlgebra::zero(d.name.empty() ? r.name + "#V" : d.name, std::move(basis), r.semigroup,
                                  r.weight);
  auto put = [&](size_t i, size_t j, const Vec& rp, const Vec& vp) {
    for (size_t k = 0; k < n; ++k) e.mu.at(i, j, k) = rp[k];
    for (size_t k = 0; k < m; ++k) e.mu.at(i, j, n + k) = vp[k];
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) put(i, j, r.mu.on_basis(i, j), zero_vec(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t q = 0; q < m; ++q) put(i, n + q, d.harp_l.on_basis(i, q), d.tri_l.on_basis(i, q));
  for (size_t p = 0; p < m; ++p)
    for (size_t j = 0; j < n; ++j) put(n + p, j, d.harp_r.on_basis(p, j), d.tri_r.on_basis(p, j));
  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q) put(n + p, n + q, d.f.on_basis(p, q), d.mul_V.on_basis(p, q));
  auto block = [&](const Matrix& rr, const Matrix& rv, const Matrix& vv) {
    Matrix out(N, N);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) out(i, j) = rr(i, j);
      for (size_t q = 0; q < m; ++q) out(i, n + q) = rv(i, q);
    }
    for (size_t p = 0; p < m; ++p)
      for (size_t q = 0; q < m; ++q) out(n + p, n + q) = vv(p, q);
    return out;
  };
  e.theta = block(r.theta, d.eta, d.theta_V);
  for (size_t w = 0; w < r.semigroup.size(); ++w) e.P[w] = block(r.P[w], d.Q[w], d.P_V[w]);
  return {std::move(e), n};
}

Bimodule bimodule_of(const ExtendingDatum& d) {
  return Bimodule{d.base, d.vbasis, d.theta_V, d.P_V, d.tri_l, d.tri_r};
}

ExtendingDatum direct_sum_datum(const HomAlgebra& r, const HomAlgebra& b, std::string name) {
  if (!(r.semigroup == b.semigroup) || !(r.weight == b.weight))
    throw InvalidInput("direct_sum_datum: semigroup or weight mismatch");
  ExtendingDatum d = ExtendingDatum::zero(r, b.basis, std::move(name));
  d.mul_V = b.mu;
  d.P_V = b.P;
  d.theta_V = b.theta;
  return d;
}

namespace {

// Evaluation helpers for the datum maps on coordinate vectors.
struct Ops {
  const ExtendingDatum& d;
  const HomAlgebra& r;
  explicit Ops(const ExtendingDatum& dd) : d(dd), r(dd.base) {}
  Vec rr(const Vec& a, const Vec& b) const { return r.mu.apply(a, b); }
  Vec tl(const Vec& a, const Vec& x) const { return d.tri_l.apply(a, x); }
  Vec tr(const Vec& x, const Vec& a) const { return d.tri_r.apply(x, a); }
  Vec hr(const Vec& x, const Vec& a) const { return d.harp_r.apply(x, a); }
  Vec hl(const Vec& a, const Vec& x) const { return d.harp_l.apply(a, x); }
  Vec f(const Vec& x, const Vec& y) const { return d.f.apply(x, y); }
  Vec mv(const Vec& x, const Vec& y) const { return d.mul_V.apply(x, y); }
  Vec th(const Vec& a) const { return r.theta.apply(a); }
  Vec eta(const Vec& x) const { return d.eta.apply(x); }
  Vec thV(const Vec& x) const { return d.theta_V.apply(x); }
  Vec P(size_t w, const Vec& a) const { return r.P[w].apply(a); }
  Vec Q(size_t w, const Vec& x) const { return d.Q[w].apply(x); }
  Vec PV(size_t w, const Vec& x) const { return d.P_V[w].apply(x); }
  const Scalar& lam() const { return r.weight; }
};

}  // namespace

Report check_extending_structure(const ExtendingDatum& d) {
  d.validate_shape();
  if (!check_algebra(d.base).ok()) throw InvalidInput("check_extending_structure: base algebra " + d.base.name + " is not valid");
  Ops o(d);
  const HomAlgebra& R = d.base;
  const auto& S = R.semigroup;
  size_t n = R.dim(), m = d.vdim();
  std::vector<Vec> A, X;
  for (size_t i = 0; i < n; ++i) A.push_back(unit_vec(n, i));
  for (size_t p = 0; p < m; ++p) X.push_back(unit_vec(m, p));
  const auto& rn = R.basis;
  const auto& vn = d.vbasis;

  Report rep;
  rep.append(check_bimodule(bimodule_of(d)), "R1:");

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t p = 0; p < m; ++p) {
        const Vec &a = A[i], &b = A[j], &x = X[p];
        Vec ab = o.rr(a, b);
        rep.expect("R2", {rn[i], rn[j], vn[p]}, o.rr(ab, o.eta(x)) + o.hl(ab, o.thV(x)),
                   o.rr(o.th(a), o.hl(b, x)) + o.hl(o.th(a), o.tl(b, x)));
        // here the roles are (x, a, b) with x = X[p], a = A[i], b = A[j]
        rep.expect("R3", {vn[p], rn[i], rn[j]}, o.rr(o.hr(x, a), o.th(b)) + o.hr(o.tr(x, a), o.th(b)),
                   o.rr(o.eta(x), ab) + o.hr(o.thV(x), ab));
        rep.expect("R4", {rn[i], vn[p], rn[j]}, o.rr(o.hl(a, x), o.th(b)) + o.hr(o.tl(a, x), o.th(b)),
                   o.rr(o.th(a), o.hr(x, b)) + o.hl(o.th(a), o.tr(x, b)));
      }

  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q)
      for (size_t i = 0; i < n; ++i) {
        const Vec &x = X[p], &y = X[q], &a = A[i];
        Vec xy = o.mv(x, y), fxy = o.f(x, y);
        Vec ya_r = o.hr(y, a), ya_v = o.tr(y, a);
        rep.expect("R5", {vn[p], vn[q], rn[i]},
                   o.rr(o.eta(x), ya_r) + o.hl(o.eta(x), ya_v) + o.hr(o.thV(x), ya_r) + o.f(o.thV(x), ya_v),
                   o.rr(fxy, o.th(a)) + o.hr(xy, o.th(a)));
        rep.expect("R6", {vn[p], vn[q], rn[i]}, o.tr(xy, o.th(a)),
                   o.tl(o.eta(x), ya_v) + o.tr(o.thV(x), ya_r) + o.mv(o.thV(x), ya_v));

        // (a, x, y) with a = A[i], x = X[p], y = X[q]
        Vec ax_r = o.hl(a, x), ax_v = o.tl(a, x);
        rep.expect("R7", {rn[i], vn[p], vn[q]},
                   o.rr(ax_r, o.eta(y)) + o.hl(ax_r, o.thV(y)) + o.hr(ax_v, o.eta(y)) + o.f(ax_v, o.thV(y)),
                   o.rr(o.th(a), fxy) + o.hl(o.th(a), xy));
        rep.expect("R8", {rn[i], vn[p], vn[q]},
                   o.tl(ax_r, o.thV(y)) + o.tr(ax_v, o.eta(y)) + o.mv(ax_v, o.thV(y)), o.tl(o.th(a), xy));

        // (x, a, y)
        Vec xa_r = o.hr(x, a), xa_v = o.tr(x, a);
        Vec ay_r = o.hl(a, y), ay_v = o.tl(a, y);
        rep.expect("R9", {vn[p], rn[i], vn[q]},
                   o.rr(xa_r, o.eta(y)) + o.hl(xa_r, o.thV(y)) + o.hr(xa_v, o.eta(y)) + o.f(xa_v, o.thV(y)),
                   o.rr(o.eta(x), ay_r) + o.hl(o.eta(x), ay_v) + o.hr(o.thV(x), ay_r) + o.f(o.thV(x), ay_v));
        rep.expect("R10", {vn[p], rn[i], vn[q]},
                   o.tl(xa_r, o.thV(y)) + o.tr(xa_v, o.eta(y)) + o.mv(xa_v, o.thV(y)),
                   o.tl(o.eta(x), ay_v) + o.tr(o.thV(x), ay_r) + o.mv(o.thV(x), ay_v));
      }

  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q)
      for (size_t s = 0; s < m; ++s) {
        const Vec &x = X[p], &y = X[q], &z = X[s];
        Vec xy = o.mv(x, y), fxy = o.f(x, y), yz = o.mv(y, z), fyz = o.f(y, z);
        rep.expect("R11", {vn[p], vn[q], vn[s]},
                   o.rr(fxy, o.eta(z)) + o.hl(fxy, o.thV(z)) + o.hr(xy, o.eta(z)) + o.f(xy, o.thV(z)),
                   o.rr(o.eta(x), fyz) + o.hl(o.eta(x), yz) + o.hr(o.thV(x), fyz) + o.f(o.thV(x), yz));
        rep.expect("R12", {vn[p], vn[q], vn[s]},
                   o.tl(fxy, o.thV(z)) + o.tr(xy, o.eta(z)) + o.mv(xy, o.thV(z)),
                   o.tl(o.eta(x), yz) + o.tr(o.thV(x), fyz) + o.mv(o.thV(x), yz));
      }

  const Scalar& lam = o.lam();
  for (size_t al = 0; al < S.size(); ++al)
    for (size_t be = 0; be < S.size(); ++be) {
      int ab = S.mul(al, be);
      if (ab == FiniteSemigroup::kUndefined) continue;
      const std::string &sa = S.element(al), &sb = S.element(be);
      for (size_t i = 0; i < n; ++i)
        for (size_t p = 0; p < m; ++p) {
          const Vec &a = A[i], &x = X[p];
          {
            Vec Pa = o.P(al, a), Qx = o.Q(be, x), PVx = o.PV(be, x);
            Vec lhs = o.rr(Pa, Qx) + o.hl(Pa, PVx);
            Vec inR = o.hl(Pa, x) + o.rr(a, Qx) + o.hl(a, PVx) + lam * o.hl(a, x);
            Vec inV = o.tl(Pa, x) + o.tl(a, PVx) + lam * o.tl(a, x);
            rep.expect("R13", {sa, sb, rn[i], vn[p]}, lhs, o.P(ab, inR) + o.Q(ab, inV));
          }
          {
            Vec Qx = o.Q(al, x), PVx = o.PV(al, x), Pa = o.P(be, a);
            Vec lhs = o.rr(Qx, Pa) + o.hr(PVx, Pa);
            Vec inR = o.rr(Qx, a) + o.hr(PVx, a) + o.hr(x, Pa) + lam * o.hr(x, a);
            Vec inV = o.tr(PVx, a) + o.tr(x, Pa) + lam * o.tr(x, a);
            rep.expect("R14", {sa, sb, vn[p], rn[i]}, lhs, o.P(ab, inR) + o.Q(ab, inV));
          }
        }
      for (size_t p = 0; p < m; ++p)
        for (size_t q = 0; q < m; ++q) {
          const Vec &x = X[p], &y = X[q];
          Vec Qx = o.Q(al, x), PVx = o.PV(al, x), Qy = o.Q(be, y), PVy = o.PV(be, y);
          Vec inR = o.hl(Qx, y) + o.f(PVx, y) + o.hr(x, Qy) + o.f(x, PVy) + lam * o.f(x, y);
          Vec inV = o.tl(Qx, y) + o.mv(PVx, y) + o.tr(x, Qy) + o.mv(x, PVy) + lam * o.mv(x, y);
          rep.expect("R15", {sa, sb, vn[p], vn[q]},
                     o.rr(Qx, Qy) + o.hl(Qx, PVy) + o.hr(PVx, Qy) + o.f(PVx, PVy),
                     o.P(ab, inR) + o.Q(ab, inV));
          rep.expect("R16", {sa, sb, vn[p], vn[q]}, o.tl(Qx, PVy) + o.tr(PVx, Qy) + o.mv(PVx, PVy),
                     o.PV(ab, inV));
        }
    }

  for (size_t w = 0; w < S.size(); ++w)
    for (size_t p = 0; p < m; ++p) {
      const Vec& x = X[p];
      rep.expect("R17", {S.element(w), vn[p]}, o.th(o.Q(w, x)) + o.eta(o.PV(w, x)),
                 o.P(w, o.eta(x)) + o.Q(w, o.thV(x)));
    }

  rep.sort();
  return rep;
}

Matrix canonical_retraction(size_t n, size_t m) {
  Matrix rho(n, n + m);
  for (size_t i = 0; i < n; ++i) rho(i, i) = 1;
  return rho;
}

ExtendingDatum extension_to_datum(const HomAlgebra& e, const Matrix& rho, const std::optional<Matrix>& r_span) {
  e.validate_shape();
  size_t N = e.dim(), n = rho.rows();
  if (rho.cols() != N) throw ShapeError("extension_to_datum: retraction has the wrong number of columns");
  Matrix inc(N, n);
  if (r_span) {
    inc = *r_span;
    if (inc.rows() != N || inc.cols() != n) throw ShapeError("extension_to_datum: subalgebra span has the wrong shape");
  } else {
    if (n > N) throw ShapeError("extension_to_datum: retraction target larger than E");
    for (size_t i = 0; i < n; ++i) inc(i, i) = 1;
  }
  if (!(rho * inc).is_identity()) throw InvalidInput("extension_to_datum: not a retraction (rho o i != Id)");
  if (!check_subalgebra(e, inc).ok()) throw InvalidInput("extension_to_datum: R is not a subalgebra of E");

  std::vector<Vec> K = kernel(rho);
  size_t m = K.size();
  Matrix kmat = Matrix::from_columns(N, K);
  HomAlgebra base = restrict_to(e, inc);
  base.name = e.name + "_R";

  // V basis names: reuse E's names for kernel vectors that are basis vectors.
  std::vector<std::string> vnames;
  for (size_t p = 0; p < m; ++p) {
    int hit = -1;
    for (size_t i = 0; i < N; ++i) {
      if (K[p][i].is_zero()) continue;
      hit = (hit == -1 && K[p][i].is_one()) ? static_cast<int>(i) : -2;
    }
    vnames.push_back(hit >= 0 ? e.basis[hit] : "v" + std::to_string(p + 1));
  }

  ExtendingDatum d = ExtendingDatum::zero(std::move(base), std::move(vnames), e.name + "_datum");
  auto to_r = [&](const Vec& u) { return rho.apply(u); };
  auto to_v = [&](const Vec& u) {
    Vec rest = u - inc.apply(rho.apply(u));
    auto c = solve(kmat, rest);
    if (!c) throw InternalError("extension_to_datum: projection left the kernel");
    return *c;
  };
  std::vector<Vec> a = inc.columns();
  for (size_t i = 0; i < n; ++i)
    for (size_t q = 0; q < m; ++q) {
      Vec ax = e.mul(a[i], K[q]);
      d.harp_l.set_on_basis(i, q, to_r(ax));
      d.tri_l.set_on_basis(i, q, to_v(ax));
    }
  for (size_t p = 0; p < m; ++p)
    for (size_t j = 0; j < n; ++j) {
      Vec xa = e.mul(K[p], a[j]);
      d.harp_r.set_on_basis(p, j, to_r(xa));
      d.tri_r.set_on_basis(p, j, to_v(xa));
    }
  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q) {
      Vec xy = e.mul(K[p], K[q]);
      d.f.set_on_basis(p, q, to_r(xy));
      d.mul_V.set_on_basis(p, q, to_v(xy));
    }
  for (size_t p = 0; p < m; ++p) {
    Vec tx = e.theta.apply(K[p]);
    d.eta.set_column(p, to_r(tx));
    d.theta_V.set_column(p, to_v(tx));
    for (size_t w = 0; w < e.semigroup.size(); ++w) {
      Vec px = e.P[w].apply(K[p]);
      d.Q[w].set_column(p, to_r(px));
      d.P_V[w].set_column(p, to_v(px));
    }
  }
  return d;
}

HomAlgebra datum_to_extension(const ExtendingDatum& d) {
  Report rep = check_extending_structure(d);
  if (!rep.ok()) throw InvalidInput("datum_to_extension: datum fails " + rep.items().front().label);
  return build_unified_product(d).algebra;
}

Matrix witness_map(const EquivWitness& w, size_t n) {
  size_t m = w.h.rows();
  Matrix phi = Matrix::identity(n + m);
  for (size_t i = 0; i < n; ++i)
    for (size_t q = 0; q < m; ++q) phi(i, n + q) = w.g(i, q);
  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q) phi(n + p, n + q) = w.h(p, q);
  return phi;
}

EquivResult check_datum_equivalence(const ExtendingDatum& d1, const ExtendingDatum& d2, const EquivWitness& w) {
  d1.validate_shape();
  d2.validate_shape();
  if (!(d1.base == d2.base)) throw InvalidInput("check_datum_equivalence: base mismatch");
  if (d1.vdim() != d2.vdim()) throw InvalidInput("check_datum_equivalence: vdim mismatch");
  size_t n = d1.base.dim(), m = d1.vdim();
  if (w.g.rows() != n || w.g.cols() != m || w.h.rows() != m || w.h.cols() != m)
    throw ShapeError("check_datum_equivalence: witness shape mismatch");
  Ops o1(d1), o2(d2);
  const auto& S = d1.base.semigroup;
  const auto& rn = d1.base.basis;
  const auto& vn = d1.vbasis;
  auto g = [&](const Vec& x) { return w.g.apply(x); };
  auto h = [&](const Vec& x) { return w.h.apply(x); };

  Report rep;
  for (size_t i = 0; i < n; ++i)
    for (size_t p = 0; p < m; ++p) {
      Vec a = unit_vec(n, i), x = unit_vec(m, p);
      rep.expect("E1", {"tri_l", rn[i], vn[p]}, h(o1.tl(a, x)), o2.tl(a, h(x)));
      rep.expect("E1", {"tri_r", vn[p], rn[i]}, h(o1.tr(x, a)), o2.tr(h(x), a));
      rep.expect("E2", {rn[i], vn[p]}, o1.hl(a, x) + g(o1.tl(a, x)), o1.rr(a, g(x)) + o2.hl(a, h(x)));
      rep.expect("E3", {vn[p], rn[i]}, o1.hr(x, a) + g(o1.tr(x, a)), o1.rr(g(x), a) + o2.hr(h(x), a));
    }
  for (size_t p = 0; p < m; ++p) {
    Vec x = unit_vec(m, p);
    rep.expect("E1", {"theta_V", vn[p]}, h(o1.thV(x)), o2.thV(h(x)));
    for (size_t s = 0; s < S.size(); ++s) {
      rep.expect("E1", {"P_V", S.element(s), vn[p]}, h(o1.PV(s, x)), o2.PV(s, h(x)));
      rep.expect("E6", {S.element(s), vn[p]}, o1.Q(s, x) + g(o1.PV(s, x)), o1.P(s, g(x)) + o2.Q(s, h(x)));
    }
    rep.expect("E7", {vn[p]}, o1.eta(x) + g(o1.thV(x)), o1.th(g(x)) + o2.eta(h(x)));
    for (size_t q = 0; q < m; ++q) {
      Vec y = unit_vec(m, q);
      Vec gx = g(x), gy = g(y), hx = h(x), hy = h(y);
      rep.expect("E4", {vn[p], vn[q]}, o1.f(x, y) + g(o1.mv(x, y)),
                 o1.rr(gx, gy) + o2.hl(gx, hy) + o2.hr(hx, gy) + o2.f(hx, hy));
      rep.expect("E5", {vn[p], vn[q]}, h(o1.mv(x, y)), o2.tl(gx, hy) + o2.tr(hx, gy) + o2.mv(hx, hy));
    }
  }

  Report morph = check_morphism(witness_map(w, n), build_unified_product(d1).algebra,
                                build_unified_product(d2).algebra);
  if (morph.ok() != rep.ok())
    throw InternalError("check_datum_equivalence: E-conditions and morphism test disagree");

  if (!inverse(w.h)) rep.add_detail("h-invertible", {}, "h is singular");
  rep.sort();
  EquivResult out;
  out.cohomologous = rep.ok() && w.h.is_identity();
  out.report = std::move(rep);
  return out;
}

EquivWitness compose(const EquivWitness& w1, const EquivWitness& w2) {
  return EquivWitness{w1.g + w2.g * w1.h, w2.h * w1.h};
}

}  // namespace rbfam
