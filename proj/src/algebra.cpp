#include "rbfam/algebra.hpp"

#include "rbfam/errors.hpp"

namespace rbfam {

void HomAlgebra::validate_shape() const {
  size_t n = dim();
  if (mu.left_dim() != n || mu.right_dim() != n || mu.out_dim() != n)
    throw ShapeError("algebra " + name + ": multiplication tensor shape mismatch");
  if (theta.rows() != n || theta.cols() != n) throw ShapeError("algebra " + name + ": theta shape mismatch");
  if (P.size() != semigroup.size())
    throw ShapeError("algebra " + name + ": operator family not total on the semigroup");
  for (const auto& p : P)
    if (p.rows() != n || p.cols() != n) throw ShapeError("algebra " + name + ": operator shape mismatch");
}

HomAlgebra HomAlgebra::zero(std::string name, std::vector<std::string> basis, FiniteSemigroup s,
                            Scalar weight) {
  size_t n = basis.size();
  HomAlgebra a;
  a.name = std::move(name);
  a.basis = std::move(basis);
  a.P.assign(s.size(), Matrix(n, n));
  a.semigroup = std::move(s);
  a.weight = std::move(weight);
  a.mu = Bilinear(n, n, n);
  a.theta = Matrix(n, n);
  return a;
}

bool operator==(const HomAlgebra& a, const HomAlgebra& b) {
  return a.basis == b.basis && a.semigroup == b.semigroup && a.weight == b.weight &&
         a.mu == b.mu && a.theta == b.theta && a.P == b.P;
}

Report check_hom_assoc(const HomAlgebra& a) {
  a.validate_shape();
  Report rep;
  size_t n = a.dim();
  std::vector<Vec> e, th;
  for (size_t i = 0; i < n; ++i) {
    e.push_back(unit_vec(n, i));
    th.push_back(a.theta.column(i));
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec xy = a.mu.on_basis(i, j);
      for (size_t k = 0; k < n; ++k) {
        Vec lhs = a.mul(th[i], a.mu.on_basis(j, k));
        Vec rhs = a.mul(xy, th[k]);
        rep.expect("hom-assoc", {a.basis[i], a.basis[j], a.basis[k]}, lhs, rhs);
      }
    }
  rep.sort();
  return rep;
}

Report check_rb_family(const HomAlgebra& a) {
  a.validate_shape();
  Report rep;
  const auto& s = a.semigroup;
  size_t n = a.dim();
  for (size_t al = 0; al < s.size(); ++al)
    for (size_t be = 0; be < s.size(); ++be) {
      int ab = s.mul(al, be);
      if (ab == FiniteSemigroup::kUndefined) continue;
      for (size_t i = 0; i < n; ++i) {
        Vec px = a.P[al].column(i);
        Vec x = unit_vec(n, i);
        for (size_t j = 0; j < n; ++j) {
          Vec py = a.P[be].column(j);
          Vec y = unit_vec(n, j);
          Vec lhs = a.mul(px, py);
          Vec inner = a.mul(px, y) + a.mul(x, py) + a.weight * a.mu.on_basis(i, j);
          Vec rhs = a.P[ab].apply(inner);
          rep.expect("rb-family", {s.element(al), s.element(be), a.basis[i], a.basis[j]}, lhs, rhs);
        }
      }
    }
  rep.sort();
  return rep;
}

Report check_theta_P_commute(const HomAlgebra& a) {
  a.validate_shape();
  Report rep;
  for (size_t w = 0; w < a.semigroup.size(); ++w) {
    Matrix l = a.P[w] * a.theta, r = a.theta * a.P[w];
    for (size_t j = 0; j < a.dim(); ++j)
      rep.expect("theta-P", {a.semigroup.element(w), a.basis[j]}, l.column(j), r.column(j));
  }
  rep.sort();
  return rep;
}

Report check_algebra(const HomAlgebra& a) {
  Report rep = semigroup_validate(a.semigroup);
  bool closed = rep.ok() || rep.labels().count("semigroup-closure") == 0;
  rep.append(check_hom_assoc(a));
  if (closed) rep.append(check_rb_family(a));
  rep.append(check_theta_P_commute(a));
  rep.sort();
  return rep;
}

namespace {

void require_compatible(const HomAlgebra& a, const HomAlgebra& b, const char* what) {
  if (!(a.semigroup == b.semigroup))
    throw InvalidInput(std::string(what) + ": semigroup mismatch between " + a.name + " and " + b.name);
  if (!(a.weight == b.weight))
    throw InvalidInput(std::string(what) + ": weight mismatch between " + a.name + " and " + b.name);
}

}  // namespace

Report check_morphism(const Matrix& phi, const HomAlgebra& a, const HomAlgebra& b) {
  a.validate_shape();
  b.validate_shape();
  if (phi.cols() != a.dim() || phi.rows() != b.dim()) throw ShapeError("check_morphism: map shape mismatch");
  require_compatible(a, b, "check_morphism");
  Report rep;
  std::vector<Vec> img = phi.columns();
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      rep.expect("morphism-mul", {a.basis[i], a.basis[j]}, phi.apply(a.mu.on_basis(i, j)),
                 b.mul(img[i], img[j]));
  for (size_t w = 0; w < a.semigroup.size(); ++w) {
    Matrix l = phi * a.P[w], r = b.P[w] * phi;
    for (size_t j = 0; j < a.dim(); ++j)
      rep.expect("morphism-P", {a.semigroup.element(w), a.basis[j]}, l.column(j), r.column(j));
  }
  Matrix l = phi * a.theta, r = b.theta * phi;
  for (size_t j = 0; j < a.dim(); ++j) rep.expect("morphism-theta", {a.basis[j]}, l.column(j), r.column(j));
  rep.sort();
  return rep;
}

Report check_subalgebra(const HomAlgebra& e, const Matrix& span) {
  e.validate_shape();
  if (span.rows() != e.dim()) throw ShapeError("check_subalgebra: span vectors have wrong length");
  if (rank(span) != span.cols()) throw InvalidInput("check_subalgebra: span vectors are linearly dependent");
  Report rep;
  std::vector<Vec> b = span.columns();
  auto inside = [&](const Vec& v) { return solve(span, v).has_value(); };
  auto tag = [](size_t i) { return "b" + std::to_string(i + 1); };
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) {
      Vec p = e.mul(b[i], b[j]);
      if (!inside(p)) rep.add("closed-mul", {tag(i), tag(j)}, p, {});
    }
  for (size_t w = 0; w < e.semigroup.size(); ++w)
    for (size_t i = 0; i < b.size(); ++i) {
      Vec p = e.P[w].apply(b[i]);
      if (!inside(p)) rep.add("closed-P", {e.semigroup.element(w), tag(i)}, p, {});
    }
  for (size_t i = 0; i < b.size(); ++i) {
    Vec p = e.theta.apply(b[i]);
    if (!inside(p)) rep.add("closed-theta", {tag(i)}, p, {});
  }
  rep.sort();
  return rep;
}

HomAlgebra restrict_to(const HomAlgebra& e, const Matrix& span, std::vector<std::string> names) {
  e.validate_shape();
  size_t m = span.cols();
  if (names.empty()) {
    // Keep the host's names when the span is a set of basis vectors.
    for (size_t j = 0; j < m; ++j) {
      Vec c = span.column(j);
      int hit = -1;
      for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        hit = (hit == -1 && c[i].is_one()) ? static_cast<int>(i) : -2;
      }
      names.push_back(hit >= 0 ? e.basis[hit] : "b" + std::to_string(j + 1));
    }
  }
  auto coords = [&](const Vec& v) {
    auto c = solve(span, v);
    if (!c) throw InvalidInput("restrict_to: span is not closed");
    return *c;
  };
  HomAlgebra r = HomAlgebra::zero(e.name, std::move(names), e.semigroup, e.weight);
  std::vector<Vec> b = span.columns();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) r.mu.set_on_basis(i, j, coords(e.mul(b[i], b[j])));
  for (size_t i = 0; i < m; ++i) {
    r.theta.set_column(i, coords(e.theta.apply(b[i])));
    for (size_t w = 0; w < e.semigroup.size(); ++w) r.P[w].set_column(i, coords(e.P[w].apply(b[i])));
  }
  return r;
}

HomAlgebra transport(const HomAlgebra& a, const Matrix& t) {
  a.validate_shape();
  auto inv = inverse(t);
  if (!inv) throw InvalidInput("transport: change of basis is not invertible");
  HomAlgebra r = a;
  std::vector<Vec> c = t.columns();
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) r.mu.set_on_basis(i, j, inv->apply(a.mul(c[i], c[j])));
  r.theta = *inv * a.theta * t;
  for (size_t w = 0; w < a.P.size(); ++w) r.P[w] = *inv * a.P[w] * t;
  return r;
}

HomAlgebra direct_product(const HomAlgebra& a, const HomAlgebra& b, std::string name) {
  require_compatible(a, b, "direct_product");
  size_t n = a.dim(), m = b.dim();
  std::vector<std::string> basis = a.basis;
  basis.insert(basis.end(), b.basis.begin(), b.basis.end());
  HomAlgebra e = HomAlgebra::zero(name.empty() ? a.name + "x" + b.name : std::move(name),
                                  std::move(basis), a.semigroup, a.weight);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) e.mu.at(i, j, k) = a.mu.at(i, j, k);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k) e.mu.at(n + i, n + j, n + k) = b.mu.at(i, j, k);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      e.theta(i, j) = a.theta(i, j);
      for (size_t w = 0; w < a.P.size(); ++w) e.P[w](i, j) = a.P[w](i, j);
    }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      e.theta(n + i, n + j) = b.theta(i, j);
      for (size_t w = 0; w < b.P.size(); ++w) e.P[w](n + i, n + j) = b.P[w](i, j);
    }
  return e;
}

void Bimodule::validate_shape() const {
  base.validate_shape();
  size_t n = base.dim(), m = dim();
  if (theta_V.rows() != m || theta_V.cols() != m) throw ShapeError("bimodule: theta_V shape mismatch");
  if (P_V.size() != base.semigroup.size()) throw ShapeError("bimodule: P_V not total on the semigroup");
  for (const auto& p : P_V)
    if (p.rows() != m || p.cols() != m) throw ShapeError("bimodule: P_V shape mismatch");
  if (left.left_dim() != n || left.right_dim() != m || left.out_dim() != m)
    throw ShapeError("bimodule: left action shape mismatch");
  if (right.left_dim() != m || right.right_dim() != n || right.out_dim() != m)
    throw ShapeError("bimodule: right action shape mismatch");
}

Bimodule regular_bimodule(const HomAlgebra& a) {
  return Bimodule{a, a.basis, a.theta, a.P, a.mu, a.mu};
}

namespace {

void module_theta(const Bimodule& m, Report& rep) {
  for (size_t w = 0; w < m.base.semigroup.size(); ++w) {
    Matrix l = m.theta_V * m.P_V[w], r = m.P_V[w] * m.theta_V;
    for (size_t j = 0; j < m.dim(); ++j)
      rep.expect("module-theta", {m.base.semigroup.element(w), m.vbasis[j]}, l.column(j), r.column(j));
  }
}

void left_parts(const Bimodule& m, Report& rep) {
  const HomAlgebra& r = m.base;
  size_t n = r.dim(), d = m.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t x = 0; x < d; ++x) {
        // (ab) > theta_V(x) = theta(a) > (b > x)
        Vec lhs = m.left.apply(r.mu.on_basis(i, j), m.theta_V.column(x));
        Vec rhs = m.left.apply(r.theta.column(i), m.left.on_basis(j, x));
        rep.expect("left-hom", {r.basis[i], r.basis[j], m.vbasis[x]}, lhs, rhs);
      }
  const auto& s = r.semigroup;
  for (size_t al = 0; al < s.size(); ++al)
    for (size_t be = 0; be < s.size(); ++be) {
      int ab = s.mul(al, be);
      if (ab == FiniteSemigroup::kUndefined) continue;
      for (size_t i = 0; i < n; ++i)
        for (size_t x = 0; x < d; ++x) {
          // P_a(a) > P_b,V(x) = P_ab,V(P_a(a) > x + a > P_b,V(x) + lambda a > x)
          Vec pa = r.P[al].column(i), pvx = m.P_V[be].column(x);
          Vec lhs = m.left.apply(pa, pvx);
          Vec inner = m.left.apply(pa, unit_vec(d, x)) + m.left.apply(unit_vec(n, i), pvx) +
                      r.weight * m.left.on_basis(i, x);
          rep.expect("left-rb", {s.element(al), s.element(be), r.basis[i], m.vbasis[x]}, lhs,
                     m.P_V[ab].apply(inner));
        }
    }
}

void right_parts(const Bimodule& m, Report& rep) {
  const HomAlgebra& r = m.base;
  size_t n = r.dim(), d = m.dim();
  for (size_t x = 0; x < d; ++x)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        // theta_V(x) < (ab) = (x < a) < theta(b)
        Vec lhs = m.right.apply(m.theta_V.column(x), r.mu.on_basis(i, j));
        Vec rhs = m.right.apply(m.right.on_basis(x, i), r.theta.column(j));
        rep.expect("right-hom", {m.vbasis[x], r.basis[i], r.basis[j]}, lhs, rhs);
      }
  const auto& s = r.semigroup;
  for (size_t al = 0; al < s.size(); ++al)
    for (size_t be = 0; be < s.size(); ++be) {
      int ab = s.mul(al, be);
      if (ab == FiniteSemigroup::kUndefined) continue;
      for (size_t x = 0; x < d; ++x)
        for (size_t i = 0; i < n; ++i) {
          // P_a,V(x) < P_b(a) = P_ab,V(P_a,V(x) < a + x < P_b(a) + lambda x < a)
          Vec pvx = m.P_V[al].column(x), pa = r.P[be].column(i);
          Vec lhs = m.right.apply(pvx, pa);
          Vec inner = m.right.apply(pvx, unit_vec(n, i)) + m.right.apply(unit_vec(d, x), pa) +
                      r.weight * m.right.on_basis(x, i);
          rep.expect("right-rb", {s.element(al), s.element(be), m.vbasis[x], r.basis[i]}, lhs,
                     m.P_V[ab].apply(inner));
        }
    }
}

void compat_part(const Bimodule& m, Report& rep) {
  const HomAlgebra& r = m.base;
  size_t n = r.dim(), d = m.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t x = 0; x < d; ++x)
      for (size_t j = 0; j < n; ++j) {
        // (a > x) < theta(b) = theta(a) > (x < b)
        Vec lhs = m.right.apply(m.left.on_basis(i, x), r.theta.column(j));
        Vec rhs = m.left.apply(r.theta.column(i), m.right.on_basis(x, j));
        rep.expect("bimodule-compat", {r.basis[i], m.vbasis[x], r.basis[j]}, lhs, rhs);
      }
}

}  // namespace

Report check_left_module(const Bimodule& m) {
  m.validate_shape();
  Report rep;
  left_parts(m, rep);
  module_theta(m, rep);
  rep.sort();
  return rep;
}

Report check_right_module(const Bimodule& m) {
  m.validate_shape();
  Report rep;
  right_parts(m, rep);
  module_theta(m, rep);
  rep.sort();
  return rep;
}

Report check_bimodule(const Bimodule& m) {
  m.validate_shape();
  Report rep;
  left_parts(m, rep);
  right_parts(m, rep);
  module_theta(m, rep);
  compat_part(m, rep);
  rep.sort();
  return rep;
}

}  // namespace rbfam
