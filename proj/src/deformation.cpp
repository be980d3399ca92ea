#include "rbfam/deformation.hpp"

#include "rbfam/errors.hpp"

namespace rbfam {

namespace {

struct Side {
  std::string label;
  std::vector<std::string> at;
  Vec lhs, rhs;
};

void check_shape(const DeformationMap& dm) {
  dm.datum.validate_shape();
  if (dm.d.rows() != dm.datum.base.dim() || dm.d.cols() != dm.datum.vdim())
    throw ShapeError("deformation map: d must be dim R x dim V");
}

std::vector<Side> deformation_sides(const DeformationMap& dm) {
  const ExtendingDatum& D = dm.datum;
  const HomAlgebra& R = D.base;
  size_t m = D.vdim();
  auto d = [&](const Vec& x) { return dm.d.apply(x); };
  std::vector<Side> out;
  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q) {
      Vec x = unit_vec(m, p), y = unit_vec(m, q);
      Vec dx = d(x), dy = d(y);
      Vec lhs = R.mul(dx, dy) - d(D.mul_V.apply(x, y));
      Vec rhs = d(D.tri_l.apply(dx, y) + D.tri_r.apply(x, dy)) - D.harp_l.apply(dx, y) - D.harp_r.apply(x, dy) -
                D.f.apply(x, y);
      out.push_back({"D1", {D.vbasis[p], D.vbasis[q]}, lhs, rhs});
    }
  for (size_t w = 0; w < R.semigroup.size(); ++w)
    for (size_t p = 0; p < m; ++p) {
      Vec x = unit_vec(m, p);
      out.push_back({"D2", {R.semigroup.element(w), D.vbasis[p]}, d(D.P_V[w].apply(x)),
                     D.Q[w].apply(x) + R.P[w].apply(d(x))});
    }
  for (size_t p = 0; p < m; ++p) {
    Vec x = unit_vec(m, p);
    out.push_back({"D3", {D.vbasis[p]}, d(D.theta_V.apply(x)), D.eta.apply(x) + R.theta.apply(d(x))});
  }
  return out;
}

HomAlgebra deformed_unchecked(const DeformationMap& dm) {
  const ExtendingDatum& D = dm.datum;
  size_t m = D.vdim();
  HomAlgebra v = HomAlgebra::zero("V_d", D.vbasis, D.base.semigroup, D.base.weight);
  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q) {
      Vec x = unit_vec(m, p), y = unit_vec(m, q);
      v.mu.set_on_basis(p, q, D.mul_V.apply(x, y) + D.tri_l.apply(dm.d.apply(x), y) +
                                  D.tri_r.apply(x, dm.d.apply(y)));
    }
  v.P = D.P_V;
  v.theta = D.theta_V;
  return v;
}

std::vector<Side> equiv_sides(const DeformationMap& d1, const DeformationMap& d2, const Matrix& delta) {
  const ExtendingDatum& D = d1.datum;
  size_t m = D.vdim();
  auto de = [&](const Vec& x) { return delta.apply(x); };
  std::vector<Side> out;
  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q) {
      Vec x = unit_vec(m, p), y = unit_vec(m, q);
      Vec dx = de(x), dy = de(y);
      Vec lhs = de(D.mul_V.apply(x, y)) - D.mul_V.apply(dx, dy);
      Vec rhs = D.tri_l.apply(d2.d.apply(dx), dy) + D.tri_r.apply(dx, d2.d.apply(dy)) -
                de(D.tri_l.apply(d1.d.apply(x), y)) - de(D.tri_r.apply(x, d1.d.apply(y)));
      out.push_back({"DE1", {D.vbasis[p], D.vbasis[q]}, lhs, rhs});
    }
  for (size_t w = 0; w < D.base.semigroup.size(); ++w)
    for (size_t p = 0; p < m; ++p) {
      Vec x = unit_vec(m, p);
      out.push_back({"DE2", {D.base.semigroup.element(w), D.vbasis[p]}, de(D.P_V[w].apply(x)),
                     D.P_V[w].apply(de(x))});
    }
  for (size_t p = 0; p < m; ++p) {
    Vec x = unit_vec(m, p);
    out.push_back({"DE3", {D.vbasis[p]}, de(D.theta_V.apply(x)), D.theta_V.apply(de(x))});
  }
  return out;
}

Report to_report(const std::vector<Side>& sides) {
  Report rep;
  for (const auto& s : sides) rep.expect(s.label, s.at, s.lhs, s.rhs);
  rep.sort();
  return rep;
}

void require_valid_datum(const ExtendingDatum& d, const char* where) {
  Report rep = check_extending_structure(d);
  if (!rep.ok()) throw InvalidInput(std::string(where) + ": datum fails " + rep.items().front().label);
}

// ---- polynomials in one unknown over Q(lambda) ----

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  Scalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly remainder(UPoly a, const UPoly& b) {
  trim(a);
  int db = degree(b);
  while (degree(a) >= db) {
    Scalar f = a.back() / b.back();
    int shift = degree(a) - db;
    for (int i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Values at t = 0, 1, 2 determine a quadratic; the value at t = 3 confirms it.
UPoly interpolate(const Scalar& v0, const Scalar& v1, const Scalar& v2, const Scalar& v3, const char* where) {
  Scalar c0 = v0;
  Scalar c2 = (v2 - 2 * v1 + v0) / 2;
  Scalar c1 = v1 - v0 - c2;
  if (!(c0 + 3 * c1 + 9 * c2 == v3)) throw Unsupported(std::string(where) + ": constraint of degree above 2");
  UPoly p = {c0, c1, c2};
  trim(p);
  return p;
}

// Residual coordinates lhs - rhs of each side, in a fixed order.
struct Residuals {
  std::vector<std::string> keys;
  std::vector<Scalar> values;
};

Residuals residuals(const std::vector<Side>& sides) {
  Residuals r;
  for (const auto& s : sides) {
    Vec diff = s.lhs - s.rhs;
    for (size_t k = 0; k < diff.size(); ++k) {
      std::string key = s.label + " @ (";
      for (size_t i = 0; i < s.at.size(); ++i) key += (i ? "," : "") + s.at[i];
      key += ")";
      if (diff.size() > 1) key += "[" + std::to_string(k + 1) + "]";
      r.keys.push_back(key);
      r.values.push_back(diff[k]);
    }
  }
  return r;
}

Matrix one_by_one(const Scalar& s) {
  Matrix m(1, 1);
  m(0, 0) = s;
  return m;
}

}  // namespace

Report check_deformation(const DeformationMap& dm) {
  check_shape(dm);
  require_valid_datum(dm.datum, "check_deformation");
  return to_report(deformation_sides(dm));
}

HomAlgebra build_deformed(const DeformationMap& dm) {
  Report rep = check_deformation(dm);
  if (!rep.ok()) throw InvalidInput("build_deformed: d fails " + rep.items().front().label);
  return deformed_unchecked(dm);
}

DeformationMap complement_to_deformation(const Complement& b) {
  const HomAlgebra& e = b.host.algebra;
  e.validate_shape();
  size_t N = e.dim(), n = b.host.split;
  if (n > N) throw ShapeError("complement_to_deformation: split exceeds dimension");
  size_t m = N - n;
  if (b.span.rows() != N || b.span.cols() != m) throw ShapeError("complement_to_deformation: span must be N x dim V");
  Matrix rblock(N, n);
  for (size_t i = 0; i < n; ++i) rblock(i, i) = 1;
  Matrix t = hcat(rblock, b.span);
  if (rank(t) != N) throw InvalidInput("complement_to_deformation: span is not complementary to R");
  if (!check_subalgebra(e, b.span).ok()) throw InvalidInput("complement_to_deformation: span is not a subalgebra");

  DeformationMap dm{extension_to_datum(e, canonical_retraction(n, m)), Matrix(n, m)};
  for (size_t p = 0; p < m; ++p) {
    auto c = solve(t, unit_vec(N, n + p));
    if (!c) throw InternalError("complement_to_deformation: decomposition failed");
    for (size_t i = 0; i < n; ++i) dm.d(i, p) = -(*c)[i];
  }
  return dm;
}

Complement deformation_to_complement(const DeformationMap& dm) {
  Report rep = check_deformation(dm);
  if (!rep.ok()) throw InvalidInput("deformation_to_complement: d fails " + rep.items().front().label);
  size_t n = dm.datum.base.dim(), m = dm.datum.vdim();
  Complement c{build_unified_product(dm.datum), Matrix(n + m, m)};
  for (size_t p = 0; p < m; ++p) {
    for (size_t i = 0; i < n; ++i) c.span(i, p) = dm.d(i, p);
    c.span(n + p, p) = 1;
  }
  return c;
}

Report check_deformation_equiv(const DeformationMap& d1, const DeformationMap& d2, const Matrix& delta) {
  check_shape(d1);
  check_shape(d2);
  if (!(d1.datum == d2.datum)) throw InvalidInput("check_deformation_equiv: deformation maps over different datums");
  size_t m = d1.datum.vdim();
  if (delta.rows() != m || delta.cols() != m) throw ShapeError("check_deformation_equiv: delta must be m x m");
  if (!inverse(delta)) throw InvalidInput("check_deformation_equiv: delta is not invertible");
  Report rep = to_report(equiv_sides(d1, d2, delta));
  bool iso = check_morphism(delta, deformed_unchecked(d1), deformed_unchecked(d2)).ok();
  if (iso != rep.ok()) throw InternalError("check_deformation_equiv: conditions and isomorphism test disagree");
  return rep;
}

std::string upoly_to_string(const UPoly& p, const std::string& var) {
  std::string out;
  for (int k = degree(p); k >= 0; --k) {
    const Scalar& c = p[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool simple = c.is_constant() || c.is_monomial();
    if (!simple) cs = "(" + cs + ")";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string term;
    if (k == 0) term = cs;
    else if (c.is_one()) term = mono;
    else if ((-c).is_one()) term = "-" + mono;
    else term = cs + "*" + mono;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

std::string SolutionSet::to_string() const {
  switch (kind) {
    case Kind::All: return "ALL";
    case Kind::Irrational: return "irrational root, not representable";
    default: break;
  }
  std::string out = "{";
  for (size_t i = 0; i < roots.size(); ++i) out += (i ? ", " : "") + roots[i].to_string();
  return out + "}";
}

DeformationMap deformation_1dim(const ExtendingDatum& datum, const Scalar& value) {
  if (datum.base.dim() != 1 || datum.vdim() != 1)
    throw Unsupported("one-dimensional deformation needs dim R = dim V = 1");
  return DeformationMap{datum, one_by_one(value)};
}

SolutionSet solve_deformation_1dim(const ExtendingDatum& datum) {
  if (datum.base.dim() != 1 || datum.vdim() != 1)
    throw Unsupported("solve_deformation_1dim: needs dim R = dim V = 1");
  require_valid_datum(datum, "solve_deformation_1dim");
  std::vector<Residuals> at;
  for (int t = 0; t < 4; ++t) at.push_back(residuals(deformation_sides(deformation_1dim(datum, t))));

  SolutionSet sol;
  for (size_t k = 0; k < at[0].keys.size(); ++k) {
    UPoly p = interpolate(at[0].values[k], at[1].values[k], at[2].values[k], at[3].values[k], "solve_deformation_1dim");
    if (!p.empty()) sol.constraints.emplace_back(at[0].keys[k], p);
  }
  if (sol.constraints.empty()) {
    sol.kind = SolutionSet::Kind::All;
    return sol;
  }
  UPoly g;
  for (const auto& c : sol.constraints) g = gcd(g, c.second);
  sol.common = g;
  if (degree(g) == 0) {
    sol.kind = SolutionSet::Kind::Empty;
  } else if (degree(g) == 1) {
    sol.kind = SolutionSet::Kind::Finite;
    sol.roots = {-g[0]};
  } else {
    Scalar disc = g[1] * g[1] - 4 * g[0];
    Scalar s;
    if (!disc.sqrt(s)) {
      sol.kind = SolutionSet::Kind::Irrational;
      return sol;
    }
    sol.kind = SolutionSet::Kind::Finite;
    Scalar r1 = (-g[1] - s) / 2, r2 = (-g[1] + s) / 2;
    if (r1.is_constant() && r2.is_constant() && r2.eval(0) < r1.eval(0)) std::swap(r1, r2);
    sol.roots = {r1};
    if (!(r1 == r2)) sol.roots.push_back(r2);
  }
  return sol;
}

std::optional<Scalar> find_equiv_witness_1dim(const DeformationMap& d1, const DeformationMap& d2) {
  check_shape(d1);
  check_shape(d2);
  if (d1.datum.vdim() != 1) throw Unsupported("find_equiv_witness_1dim: needs dim V = 1");
  if (!(d1.datum == d2.datum)) throw InvalidInput("find_equiv_witness_1dim: deformation maps over different datums");
  std::vector<Residuals> at;
  for (int t = 0; t < 4; ++t) at.push_back(residuals(equiv_sides(d1, d2, one_by_one(t))));
  UPoly g;
  for (size_t k = 0; k < at[0].keys.size(); ++k) {
    UPoly p = interpolate(at[0].values[k], at[1].values[k], at[2].values[k], at[3].values[k], "find_equiv_witness_1dim");
    if (p.empty()) continue;
    if (!p[0].is_zero()) throw InternalError("find_equiv_witness_1dim: condition fails at delta = 0");
    p.erase(p.begin());  // divide by delta
    g = gcd(g, p);
  }
  if (g.empty()) return Scalar(1);
  if (degree(g) != 1) return std::nullopt;
  Scalar root = -g[0];
  if (root.is_zero()) return std::nullopt;
  return root;
}

IndexReport count_index_1dim(const ExtendingDatum& datum) {
  IndexReport rep;
  rep.solutions = solve_deformation_1dim(datum);
  using K = SolutionSet::Kind;
  if (rep.solutions.kind == K::Irrational) throw Unsupported("count_index_1dim: irrational solutions");
  if (rep.solutions.kind == K::Finite) {
    std::vector<std::vector<Scalar>> classes;
    for (const auto& r : rep.solutions.roots) {
      DeformationMap dr = deformation_1dim(datum, r);
      bool placed = false;
      for (auto& cls : classes) {
        DeformationMap rep_dm = deformation_1dim(datum, cls.front());
        auto w = find_equiv_witness_1dim(dr, rep_dm);
        if (w && check_deformation_equiv(dr, rep_dm, one_by_one(*w)).ok()) {
          cls.push_back(r);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({r});
    }
    for (const auto& cls : classes) {
      rep.representatives.push_back(cls.front());
      std::string desc = "d in {";
      for (size_t i = 0; i < cls.size(); ++i) desc += (i ? ", " : "") + cls[i].to_string();
      rep.classes.push_back(desc + "}");
    }
    rep.index = classes.size();
    return rep;
  }
  if (rep.solutions.kind == K::Empty) return rep;

  // Every d is a deformation map. V_d is x.x = c(d) x with c affine in d,
  // so the classes are {c = 0} and {c != 0}.
  auto c_of = [&](const Scalar& t) { return deformed_unchecked(deformation_1dim(datum, t)).mu.at(0, 0, 0); };
  Scalar c0 = c_of(0), slope = c_of(1) - c0;
  if (!(c_of(2) == c0 + 2 * slope)) throw InternalError("count_index_1dim: deformed product not affine in d");
  if (slope.is_zero()) {
    rep.index = 1;
    rep.representatives = {Scalar(0)};
    rep.classes = {"all d"};
    return rep;
  }
  Scalar t0 = -c0 / slope, t1 = (1 - c0) / slope;
  DeformationMap m0 = deformation_1dim(datum, t0), m1 = deformation_1dim(datum, t1);
  if (find_equiv_witness_1dim(m0, m1)) throw InternalError("count_index_1dim: special class is not isolated");
  Scalar other = t1 + 1 == t0 ? t1 + 2 : t1 + 1;
  DeformationMap m2 = deformation_1dim(datum, other);
  auto w = find_equiv_witness_1dim(m2, m1);
  if (!w || !check_deformation_equiv(m2, m1, one_by_one(*w)).ok())
    throw InternalError("count_index_1dim: generic class is not connected");
  rep.index = 2;
  rep.representatives = {t0, t1};
  rep.classes = {"d = " + t0.to_string(), "d != " + t0.to_string()};
  return rep;
}

std::string IndexReport::to_string() const {
  std::string out = "solutions = " + solutions.to_string() + "\n";
  out += "index = " + std::to_string(index) + "\n";
  for (size_t i = 0; i < classes.size(); ++i)
    out += "class " + std::to_string(i + 1) + ": " + classes[i] + ", representative " +
           representatives[i].to_string() + "\n";
  return out;
}

}  // namespace rbfam
